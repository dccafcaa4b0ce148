//! Gaussian elimination over ℚ.

use num_traits::{One, Zero};

use crate::algebra::Rational;

/// Basis of the right nullspace {x : A x = 0} of a matrix given by rows.
pub fn nullspace(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for c in 0..ncols {
            m[row][c] = &m[row][c] * &inv;
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..ncols {
                    let v = &m[row][c] * &f;
                    m[r][c] -= v;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rational::zero(); ncols];
        v[free] = Rational::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[r][free].clone();
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    #[test]
    fn rank_one_system() {
        let rows = vec![vec![int(1), int(2), int(3)], vec![int(2), int(4), int(6)]];
        let ns = nullspace(&rows, 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            let dot: Rational = rows[0].iter().zip(v).map(|(a, b)| a * b).sum();
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn full_rank_has_trivial_nullspace() {
        let rows = vec![vec![int(1), int(1)], vec![int(1), int(-1)]];
        assert!(nullspace(&rows, 2).is_empty());
    }

    #[test]
    fn empty_system_is_everything() {
        assert_eq!(nullspace(&[], 3).len(), 3);
    }
}
