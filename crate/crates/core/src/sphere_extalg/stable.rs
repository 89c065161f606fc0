//! Stable extension groups: `Extalg_λ(K(S^{2n}), K̃(S^{2(n+k)}))` no longer
//! depends on `n` once `n > k + 1`.

use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::gn::big_g;
use super::groups::{extalg_lambda, AbelianGroupDescriptor};
use super::ExtalgError;

/// How many consecutive `n` past the threshold are compared before a stable
/// group is reported.
pub const STABILITY_GRID: u32 = 5;

/// Checks `G_{n,n+k} = G_{n+1,n+k+1}` for `k + 2 ≤ n ≤ n_last`.
pub fn check_stability(k: u32, n_last: u32) -> Result<(), ExtalgError> {
    for n in (k + 2)..=n_last {
        let a = big_g(n, n + k)?.value;
        let b = big_g(n + 1, n + k + 1)?.value;
        if a != b {
            return Err(ExtalgError::StabilityViolated { k, n });
        }
    }
    Ok(())
}

/// The stable group for gap `k`, evaluated at `n = k + 2`.
pub fn stable_extalg(k: u32) -> Result<AbelianGroupDescriptor, ExtalgError> {
    if k == 0 {
        return Err(ExtalgError::ZeroArgument("k"));
    }
    check_stability(k, k + 1 + STABILITY_GRID)?;
    extalg_lambda(k + 2, 2 * k + 2)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StableRow {
    pub k: u32,
    #[serde(with = "crate::json::bigint_vec")]
    pub torsion: Vec<BigInt>,
    pub free_part: String,
}

impl fmt::Display for StableRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let torsion: String = self.torsion.iter().map(|t| format!(" ⊕ Z_{t}")).collect();
        write!(f, "{}{}", self.free_part, torsion)
    }
}

pub fn stable_table(k_max: u32) -> Result<Vec<StableRow>, ExtalgError> {
    (1..=k_max)
        .into_par_iter()
        .map(|k| {
            let d = stable_extalg(k)?;
            Ok(StableRow { k, free_part: d.free_part().to_string(), torsion: d.torsion })
        })
        .collect()
}

/// Fixed-width text rendering with a header.
pub fn format_stable_table(rows: &[StableRow]) -> String {
    let cells: Vec<(String, String)> = rows.iter().map(|r| (r.k.to_string(), r.to_string())).collect();
    let kw = cells.iter().map(|c| c.0.len()).max().unwrap_or(1).max(1);
    let mut out = format!("{:>kw$}  Extalg^s_2k\n", "k");
    for (k, g) in cells {
        out.push_str(&format!("{k:>kw$}  {g}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_rows() {
        let rows = stable_table(8).unwrap();
        let torsion: Vec<BigInt> = rows.iter().map(|r| r.torsion[0].clone()).collect();
        let expected: Vec<BigInt> = [2, 24, 2, 240, 2, 504, 2, 480].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(torsion, expected);
        assert!(rows.iter().all(|r| r.free_part == "2Z"));
        assert_eq!(stable_extalg(2).unwrap().to_string(), "2Z ⊕ Z_24");
        assert_eq!(rows[3].to_string(), "2Z ⊕ Z_240");
    }

    #[test]
    fn text_table() {
        let s = format_stable_table(&stable_table(2).unwrap());
        assert_eq!(s, "k  Extalg^s_2k\n1  2Z ⊕ Z_2\n2  2Z ⊕ Z_24\n");
    }
}
