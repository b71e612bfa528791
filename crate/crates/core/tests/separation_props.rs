use proptest::prelude::*;
use rhombic_core::median::ZeroMask;
use rhombic_core::separation::{masks_intersect, separates, separates_with, Connectivity, CornerPair};

/// Monotone path from the left column to the right one, rising from
/// `(0, 0)` or falling from `(0, g − 1)`. Each step moves right, moves
/// vertically, or (when `diagonal`) both.
fn staircase(g: usize, rising: bool, diagonal: bool, steps: &[u8]) -> ZeroMask {
    let mut m = ZeroMask::new(g);
    let (mut i, mut j) = (0usize, if rising { 0 } else { g - 1 });
    let at_end = |j: usize| if rising { j == g - 1 } else { j == 0 };
    let vert = |j: usize| if rising { j + 1 } else { j - 1 };
    m.set(i, j);
    let mut k = 0;
    while i < g - 1 || !at_end(j) {
        let choice = steps.get(k).copied().unwrap_or(0) % if diagonal { 3 } else { 2 };
        k += 1;
        if i == g - 1 {
            j = vert(j);
        } else if at_end(j) {
            i += 1;
        } else {
            match choice {
                0 => i += 1,
                1 => j = vert(j),
                _ => {
                    i += 1;
                    j = vert(j);
                }
            }
        }
        m.set(i, j);
    }
    m
}

fn with_noise(mut m: ZeroMask, noise: &[(usize, usize)]) -> ZeroMask {
    let g = m.resolution();
    for &(i, j) in noise {
        m.set(i % g, j % g);
    }
    m
}

/// Copy of `m` without the listed cells.
fn with_gaps(m: &ZeroMask, gaps: &[(usize, usize)]) -> ZeroMask {
    let g = m.resolution();
    let mut out = ZeroMask::new(g);
    for (i, j) in m.marked() {
        if !gaps.iter().any(|&(a, b)| (a % g, b % g) == (i, j)) {
            out.set(i, j);
        }
    }
    out
}

fn cells() -> impl Strategy<Value = Vec<(usize, usize)>> {
    prop::collection::vec((0usize..64, 0usize..64), 0..40)
}

fn steps() -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(any::<u8>(), 0..128)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn separating_masks_always_intersect(
        g in 4usize..48,
        rise in steps(),
        fall in steps(),
        noise_k in cells(),
        noise_l in cells(),
        gaps in prop::collection::vec((0usize..64, 0usize..64), 0..3),
    ) {
        // One barrier may be merely 8-connected; the other must block
        // diagonal paths as well.
        let k = with_gaps(&with_noise(staircase(g, true, true, &rise), &noise_k), &gaps);
        let l = with_gaps(&with_noise(staircase(g, false, false, &fall), &noise_l), &gaps);
        if separates(&k, CornerPair::ANTI_DIAGONAL)
            && separates_with(&l, CornerPair::DIAGONAL, Connectivity::Eight)
        {
            prop_assert!(!masks_intersect(&k, &l).unwrap().is_empty());
        }
        let k4 = with_noise(staircase(g, true, false, &rise), &noise_k);
        let l8 = with_gaps(&with_noise(staircase(g, false, true, &fall), &noise_l), &gaps);
        if separates_with(&k4, CornerPair::ANTI_DIAGONAL, Connectivity::Eight)
            && separates(&l8, CornerPair::DIAGONAL)
        {
            prop_assert!(!masks_intersect(&k4, &l8).unwrap().is_empty());
        }
    }

    #[test]
    fn unbroken_staircases_separate(g in 2usize..48, rise in steps(), fall in steps()) {
        prop_assert!(separates(&staircase(g, true, true, &rise), CornerPair::ANTI_DIAGONAL));
        prop_assert!(separates(&staircase(g, false, true, &fall), CornerPair::DIAGONAL));
        let strong = staircase(g, true, false, &rise);
        prop_assert!(separates_with(&strong, CornerPair::ANTI_DIAGONAL, Connectivity::Eight));
    }

    #[test]
    fn adding_cells_keeps_separation(g in 4usize..48, rise in steps(), extra in cells(), gaps in cells()) {
        let base = with_gaps(&staircase(g, true, true, &rise), &gaps);
        let grown = with_noise(base.clone(), &extra);
        for pair in [CornerPair::ANTI_DIAGONAL, CornerPair::DIAGONAL] {
            for paths in [Connectivity::Four, Connectivity::Eight] {
                if separates_with(&base, pair, paths) {
                    prop_assert!(separates_with(&grown, pair, paths));
                }
            }
        }
    }
}
