//! Known component-size censuses of the two-colour cyclic flip graph for
//! small polygons, recorded as `(size, count)` rows. Used as cross-checks by
//! the verifier and the test suite.

/// The census for an `n`-gon with two cyclic colours, or `None` when no
/// table is recorded. Rows are sorted by component size.
pub fn two_colour_census(n_vertices: usize) -> Option<&'static [(u64, u64)]> {
    Some(match n_vertices {
        4 => &[(1, 4), (2, 2)],
        5 => &[(1, 10), (3, 10)],
        6 => &[(1, 28), (4, 16), (5, 12), (6, 12)],
        7 => &[(1, 84), (5, 14), (6, 28), (9, 42), (10, 14), (12, 42)],
        8 => &[
            (1, 264),
            (6, 16),
            (7, 16),
            (8, 16),
            (10, 16),
            (12, 64),
            (13, 8),
            (14, 8),
            (15, 16),
            (16, 32),
            (18, 32),
            (19, 64),
            (20, 40),
            (21, 16),
            (22, 32),
            (23, 32),
            (26, 16),
            (28, 8),
            (29, 16),
            (32, 2),
            (34, 8),
            (36, 4),
        ],
        9 => &[
            (1, 858),
            (7, 18),
            (9, 36),
            (13, 36),
            (15, 54),
            (17, 36),
            (18, 36),
            (21, 18),
            (23, 72),
            (27, 126),
            (28, 72),
            (29, 6),
            (31, 54),
            (32, 36),
            (33, 18),
            (34, 72),
            (35, 18),
            (36, 108),
            (37, 36),
            (38, 72),
            (41, 36),
            (42, 36),
            (44, 36),
            (45, 108),
            (46, 36),
            (53, 54),
            (55, 36),
            (57, 18),
            (59, 54),
            (61, 36),
            (66, 36),
            (70, 36),
            (71, 18),
            (79, 6),
        ],
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colour::{count_coloured, count_frozen};
    use num_bigint::BigUint;

    #[test]
    fn tables_are_internally_consistent() {
        for n in 4..=9usize {
            let rows = two_colour_census(n).unwrap();
            let total: u64 = rows.iter().map(|&(s, c)| s * c).sum();
            assert_eq!(BigUint::from(total), count_coloured(n, 2).unwrap(), "n={n}");
            assert_eq!(
                BigUint::from(rows[0].1),
                count_frozen(n, 2).unwrap(),
                "n={n}"
            );
            assert_eq!(rows[0].0, 1);
            assert!(rows.windows(2).all(|w| w[0].0 < w[1].0));
        }
        assert_eq!(two_colour_census(8).unwrap().len(), 22);
        assert_eq!(two_colour_census(9).unwrap().len(), 34);
        assert!(two_colour_census(10).is_none());
        assert!(two_colour_census(3).is_none());
    }
}
