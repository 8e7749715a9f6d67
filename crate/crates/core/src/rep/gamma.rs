//! The γ-contraction: evaluation against the dual of the superstandard
//! tableau, as a product of column minors.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rep::matrix::RationalMatrix;
use crate::tableau::Tableau;

/// γ(gT) = ∏ over columns c of det(g_{1..μ_c, T(1,c)}, …, g_{1..μ_c, T(μ_c,c)}),
/// where a determinant of a tall matrix is the determinant of its top square
/// part. A non-regular tableau evaluates to 0 without touching g.
pub fn gamma_eval(g: &RationalMatrix, t: &Tableau) -> Result<BigRational> {
    for e in t.iter_entries() {
        let v = e.plain().ok_or_else(|| {
            Error::DegenerateInput("gamma_eval needs plain integer entries".into())
        })?;
        if v == 0 || v as usize > g.cols() {
            return Err(Error::IndexError { entry: v, cols: g.cols() });
        }
    }
    let height = t.shape().length();
    if height > g.rows() {
        return Err(Error::ShapeError(format!(
            "column length {height} exceeds the {} rows of g",
            g.rows()
        )));
    }
    if !t.is_regular() {
        return Ok(BigRational::zero());
    }
    let mut product = BigRational::one();
    for c in 0..t.n_columns() {
        let col = t.column(c);
        let sel: Vec<usize> =
            col.iter().map(|e| e.plain().unwrap() as usize - 1).collect();
        let d = g.minor_det(sel.len(), &sel);
        if d.is_zero() {
            return Ok(BigRational::zero());
        }
        product *= d;
    }
    Ok(product)
}

/// The orbit highest-weight function g ↦ γ(g P_m S) evaluated directly as
/// Σ over entry permutations π of γ(g·πS); no straightening involved.
pub fn orbit_hwv_eval(s: &Tableau, g: &RationalMatrix) -> Result<BigRational> {
    if g.rows() != g.cols() {
        return Err(Error::ShapeError(format!(
            "orbit evaluation needs a square matrix, got {}x{}",
            g.rows(),
            g.cols()
        )));
    }
    let m = g.rows();
    for e in s.iter_entries() {
        let v = e.plain().ok_or_else(|| {
            Error::DegenerateInput("orbit_hwv_eval needs plain integer entries".into())
        })?;
        if v == 0 || v as usize > m {
            return Err(Error::IndexError { entry: v, cols: m });
        }
    }
    let mut total = BigRational::zero();
    let mut perm: Vec<u32> = (1..=m as u32).collect();
    permute(&mut perm, 0, &mut |perm| {
        let image = s.relabel(perm);
        total += gamma_eval(g, &image).expect("entries stay in range under relabeling");
    });
    Ok(total)
}

fn permute(perm: &mut Vec<u32>, at: usize, f: &mut impl FnMut(&[u32])) {
    if at == perm.len() {
        f(perm);
        return;
    }
    for i in at..perm.len() {
        perm.swap(at, i);
        permute(perm, at + 1, f);
        perm.swap(at, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::young;
    use num_bigint::BigInt;

    fn rat(x: i64) -> BigRational {
        BigRational::from(BigInt::from(x))
    }

    #[test]
    fn identity_on_superstandard() {
        let sup = Tableau::superstandard(&"4,3,1".parse().unwrap());
        let g = RationalMatrix::identity(4);
        assert_eq!(gamma_eval(&g, &sup).unwrap(), rat(1));
    }

    #[test]
    fn column_swap_changes_sign() {
        let g = RationalMatrix::identity(2);
        let t = young(&["2", "1"]);
        assert_eq!(gamma_eval(&g, &t).unwrap(), rat(-1));
    }

    #[test]
    fn regular_full_column_gives_plus_minus_det() {
        // any unit-determinant g: γ(g col) ∈ {−1, 1}
        let g: RationalMatrix = "1,1,0;0,1,2;0,0,1".parse().unwrap();
        for t in [young(&["1", "2", "3"]), young(&["2", "3", "1"]), young(&["3", "1", "2"])] {
            let v = gamma_eval(&g, &t).unwrap();
            assert!(v == rat(1) || v == rat(-1), "got {v}");
        }
    }

    #[test]
    fn non_regular_is_zero_for_any_matrix() {
        let g: RationalMatrix = "3,7;1,9".parse().unwrap();
        let t = young(&["11", "1"]);
        assert_eq!(gamma_eval(&g, &t).unwrap(), BigRational::zero());
    }

    #[test]
    fn entry_out_of_range() {
        let g = RationalMatrix::identity(2);
        let t = young(&["3"]);
        assert!(matches!(gamma_eval(&g, &t), Err(Error::IndexError { .. })));
    }

    #[test]
    fn factorizes_over_columns() {
        let g: RationalMatrix = "2,1,5;0,3,1;4,1,1".parse().unwrap();
        let t = young(&["112", "23", "3"]);
        let direct = gamma_eval(&g, &t).unwrap();
        let mut product = rat(1);
        for c in 0..t.n_columns() {
            let col: Vec<Vec<u32>> =
                t.column(c).iter().map(|e| vec![e.plain().unwrap()]).collect();
            let col_t = Tableau::from_rows(col);
            product *= gamma_eval(&g, &col_t).unwrap();
        }
        assert_eq!(direct, product);
    }

    #[test]
    fn orbit_eval_m1_reduces_to_gamma() {
        let g: RationalMatrix = "5".parse().unwrap();
        let t = young(&["111"]);
        assert_eq!(orbit_hwv_eval(&t, &g).unwrap(), rat(125));
    }

    #[test]
    fn orbit_eval_single_column_sums_signs() {
        // S = regular full column (1,2): γ(id·πS) = sgn(π), summing to 0
        let g = RationalMatrix::identity(2);
        let t = young(&["1", "2"]);
        assert_eq!(orbit_hwv_eval(&t, &g).unwrap(), BigRational::zero());
    }
}
