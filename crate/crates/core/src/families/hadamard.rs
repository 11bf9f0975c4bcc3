use std::fmt;
use std::str::FromStr;

use super::field::{is_prime, Field};
use super::FamilyError;

/// A square ±1 matrix with `H·Hᵀ = k·I`.
#[derive(Clone, PartialEq, Eq)]
pub struct HadamardMatrix {
    k: usize,
    entries: Vec<i8>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HadamardMethod {
    /// Tensor powers of the order-2 matrix; `k` a power of two.
    Sylvester,
    /// From quadratic residues mod a prime `q ≡ 3 (mod 4)`; `k = q + 1`.
    Paley1,
}

impl FromStr for HadamardMethod {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "sylvester" => Ok(HadamardMethod::Sylvester),
            "paley1" | "paley" => Ok(HadamardMethod::Paley1),
            _ => Err(FamilyError::InvalidHadamard(format!("unknown construction `{s}`"))),
        }
    }
}

impl HadamardMatrix {
    /// Validates entries (row-major) and orthogonality.
    pub fn new(k: usize, entries: Vec<i8>) -> Result<HadamardMatrix, FamilyError> {
        if k == 0 || entries.len() != k * k {
            return Err(FamilyError::InvalidHadamard(format!("expected {} entries", k * k)));
        }
        if entries.iter().any(|&e| e != 1 && e != -1) {
            return Err(FamilyError::InvalidHadamard("entries must be +1 or -1".into()));
        }
        let h = HadamardMatrix { k, entries };
        for i in 0..k {
            for j in i + 1..k {
                let dot: i64 = (0..k).map(|c| i64::from(h.get(i, c)) * i64::from(h.get(j, c))).sum();
                if dot != 0 {
                    return Err(FamilyError::InvalidHadamard(format!("rows {i} and {j} are not orthogonal")));
                }
            }
        }
        Ok(h)
    }

    pub fn construct(k: usize, method: HadamardMethod) -> Result<HadamardMatrix, FamilyError> {
        match method {
            HadamardMethod::Sylvester => HadamardMatrix::sylvester(k),
            HadamardMethod::Paley1 => HadamardMatrix::paley1(k),
        }
    }

    pub fn sylvester(k: usize) -> Result<HadamardMatrix, FamilyError> {
        if !k.is_power_of_two() {
            return Err(FamilyError::InvalidHadamard(format!("Sylvester order {k} is not a power of two")));
        }
        // H[i][j] = (-1)^popcount(i & j)
        let entries = (0..k * k).map(|x| if ((x / k) & (x % k)).count_ones().is_multiple_of(2) { 1 } else { -1 }).collect();
        HadamardMatrix::new(k, entries)
    }

    pub fn paley1(k: usize) -> Result<HadamardMatrix, FamilyError> {
        let q = k.wrapping_sub(1);
        if k < 4 || !is_prime(q) || q % 4 != 3 {
            return Err(FamilyError::InvalidHadamard(format!(
                "Paley I order {k} needs k - 1 prime and congruent to 3 mod 4"
            )));
        }
        let f = Field::new(q).expect("prime order");
        let sq = f.squares();
        let chi = |x: usize| -> i8 {
            if x == 0 {
                0
            } else if sq[x] {
                1
            } else {
                -1
            }
        };
        // H = I + S with S = [[0, 1ᵀ], [-1, Q]] and Q[i][j] = χ(j - i).
        let mut entries = vec![0i8; k * k];
        for i in 0..k {
            for j in 0..k {
                let s = match (i, j) {
                    (0, 0) => 0,
                    (0, _) => 1,
                    (_, 0) => -1,
                    _ => chi(f.sub(j - 1, i - 1)),
                };
                entries[i * k + j] = s + i8::from(i == j);
            }
        }
        HadamardMatrix::new(k, entries)
    }

    /// `k` lines of `k` characters from `+` and `-`; blank lines ignored.
    pub fn parse(text: &str) -> Result<HadamardMatrix, FamilyError> {
        let rows: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
        let k = rows.len();
        let mut entries = Vec::with_capacity(k * k);
        for (i, row) in rows.iter().enumerate() {
            if row.chars().count() != k {
                return Err(FamilyError::InvalidHadamard(format!("row {} has length {} (expected {k})", i + 1, row.len())));
            }
            for ch in row.chars() {
                entries.push(match ch {
                    '+' => 1,
                    '-' => -1,
                    _ => return Err(FamilyError::InvalidHadamard(format!("unexpected character `{ch}` in row {}", i + 1))),
                });
            }
        }
        HadamardMatrix::new(k, entries)
    }

    pub fn order(&self) -> usize {
        self.k
    }

    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[i * self.k + j]
    }
}

impl fmt::Display for HadamardMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.k {
            let row: String = (0..self.k).map(|j| if self.get(i, j) > 0 { '+' } else { '-' }).collect();
            writeln!(f, "{row}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for HadamardMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HadamardMatrix({})\n{self}", self.k)
    }
}
