use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::{primes_up_to, CongruenceError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    PaperGiven,
    CrtDerived,
}

/// A union of residue classes `x = r (mod modulus)` describing a family of
/// primes.
///
/// Residues are least nonnegative representatives, sorted and distinct, and
/// each is a unit mod `modulus`. The one exception is the result of an
/// inconsistent [`crt_intersect`], which has no residues and `empty` set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceFamily {
    modulus: u64,
    residues: Vec<u64>,
    label: String,
    provenance: Provenance,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    empty: bool,
}

impl CongruenceFamily {
    pub fn new(
        modulus: u64,
        residues: impl IntoIterator<Item = u64>,
        label: impl Into<String>,
        provenance: Provenance,
    ) -> Result<Self, CongruenceError> {
        let label = label.into();
        if modulus == 0 {
            return Err(CongruenceError::BadFamily {
                label,
                reason: "modulus must be positive".into(),
            });
        }
        let mut residues: Vec<u64> = residues.into_iter().map(|r| r % modulus).collect();
        residues.sort_unstable();
        residues.dedup();
        if residues.is_empty() {
            return Err(CongruenceError::BadFamily {
                label,
                reason: "no residues".into(),
            });
        }
        if let Some(r) = residues.iter().find(|&&r| r.gcd(&modulus) != 1) {
            return Err(CongruenceError::BadFamily {
                reason: format!("{r} is not a unit mod {modulus}"),
                label,
            });
        }
        Ok(CongruenceFamily {
            modulus,
            residues,
            label,
            provenance,
            empty: false,
        })
    }

    /// Shorthand for a paper-given family.
    pub fn given(
        modulus: u64,
        residues: impl IntoIterator<Item = u64>,
        label: impl Into<String>,
    ) -> Result<Self, CongruenceError> {
        Self::new(modulus, residues, label, Provenance::PaperGiven)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn residues(&self) -> &[u64] {
        &self.residues
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// True for the result of intersecting inconsistent conditions.
    pub fn is_empty(&self) -> bool {
        self.empty
    }

    pub fn contains(&self, x: u64) -> bool {
        self.residues.binary_search(&(x % self.modulus)).is_ok()
    }

    /// Same modulus and residues, ignoring label and provenance.
    pub fn same_classes(&self, other: &CongruenceFamily) -> bool {
        self.modulus == other.modulus && self.residues == other.residues
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }
}

impl fmt::Display for CongruenceFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.empty {
            return write!(f, "(none) (mod {})", self.modulus);
        }
        let rs: Vec<String> = self.residues.iter().map(u64::to_string).collect();
        write!(f, "{} (mod {})", rs.join(", "), self.modulus)
    }
}

/// Solves `x = a (mod m)`, `x = b (mod n)`. Returns `(x, lcm)` with
/// `0 <= x < lcm`, or `None` when the two classes are incompatible.
pub fn crt_pair<T: Integer + Clone>(a: &T, m: &T, b: &T, n: &T) -> Option<(T, T)> {
    let eg = m.extended_gcd(n);
    let g = eg.gcd;
    let diff = b.clone() - a.clone();
    if !diff.is_multiple_of(&g) {
        return None;
    }
    let l = m.clone() / g.clone() * n.clone();
    let n_g = n.clone() / g.clone();
    // x = a + m * t with t = (diff/g) * inv(m/g) mod n/g
    let t = (diff / g * eg.x).mod_floor(&n_g);
    let x = (a.clone() + m.clone() * t).mod_floor(&l);
    Some((x, l))
}

/// All classes satisfying every condition at once, modulo the lcm of the
/// moduli.
pub fn crt_intersect(conditions: &[CongruenceFamily]) -> Result<CongruenceFamily, CongruenceError> {
    let (first, rest) = conditions
        .split_first()
        .ok_or(CongruenceError::NoConditions)?;
    let mut modulus = first.modulus;
    let mut residues = first.residues.clone();
    for cond in rest {
        let (m, n) = (modulus as i128, cond.modulus as i128);
        residues = residues
            .iter()
            .flat_map(|&a| {
                cond.residues
                    .iter()
                    .filter_map(move |&b| crt_pair(&(a as i128), &m, &(b as i128), &n))
            })
            .map(|(x, _)| x as u64)
            .collect();
        modulus = modulus.lcm(&cond.modulus);
    }
    residues.sort_unstable();
    residues.dedup();
    let label = conditions
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(" and ");
    Ok(CongruenceFamily {
        modulus,
        empty: residues.is_empty(),
        residues,
        label,
        provenance: Provenance::CrtDerived,
    })
}

/// Primes up to `limit` in the family, ascending.
pub fn enumerate_primes(family: &CongruenceFamily, limit: u64) -> Vec<u64> {
    primes_up_to(limit)
        .into_iter()
        .filter(|&p| family.contains(p))
        .collect()
}

/// The first `k` primes in the family, searching in doubling windows.
pub fn first_primes(family: &CongruenceFamily, k: usize) -> Vec<u64> {
    if family.is_empty() || k == 0 {
        return Vec::new();
    }
    let mut limit = 256u64.max(family.modulus * 4);
    loop {
        let found = enumerate_primes(family, limit);
        if found.len() >= k {
            return found[..k].to_vec();
        }
        limit *= 2;
    }
}
