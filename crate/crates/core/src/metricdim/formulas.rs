//! Closed forms for the metric dimension of some families.

use super::DimError;
use crate::families::PartitionSpec;
use crate::graph::{intersection_array, odd_girth, Graph};

/// Complete multipartite `K_{m_1,…,m_r}`: `Σ (m_i − 1)`, plus `s − 1` when
/// `s ≥ 2` parts are singletons (those vertices are pairwise twins, so all
/// but one must be landmarks; for `K_n` this gives `n − 1`).
pub fn formula_multipartite(spec: &PartitionSpec) -> Result<usize, DimError> {
    if spec.parts().len() < 2 {
        return Err(DimError::Formula("multipartite formula needs at least two parts".into()));
    }
    let singletons = spec.parts().iter().filter(|&&m| m == 1).count();
    Ok(spec.parts().iter().map(|m| m - 1).sum::<usize>() + singletons.saturating_sub(1))
}

/// `J(n,2)` and `K(n,2)`: `2(n − i)/3 + i` with `i = n mod 3`, for `n ≥ 6`;
/// 2, 3, 3 for `n = 3, 4, 5`.
pub fn formula_johnson_kneser2(n: usize) -> Result<usize, DimError> {
    match n {
        0..=2 => Err(DimError::Formula(format!("johnson/kneser formula needs n >= 3, got {n}"))),
        3 => Ok(2),
        4 | 5 => Ok(3),
        _ => {
            let i = n % 3;
            Ok(2 * (n - i) / 3 + i)
        }
    }
}

/// The `q × q` rook's graph `H(2,q)`: `⌊2(2q − 1)/3⌋`.
pub fn formula_lattice(q: usize) -> Result<usize, DimError> {
    if q < 1 {
        return Err(DimError::Formula("lattice formula needs q >= 1".into()));
    }
    Ok(2 * (2 * q - 1) / 3)
}

/// Whether a distance-regular graph of diameter `d` has odd girth `2d + 1`,
/// in which case its bipartite double has the same metric dimension.
pub fn double_transfer_applicable(g: &Graph) -> Result<bool, DimError> {
    let ia = intersection_array(g).map_err(|_| DimError::Disconnected)?.ok_or(DimError::NotDistanceRegular)?;
    Ok(odd_girth(g) == Some(2 * ia.diameter + 1))
}
