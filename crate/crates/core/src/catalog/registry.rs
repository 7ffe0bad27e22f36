use serde::{Deserialize, Serialize};

use super::CatalogError;
use crate::congruence::{
    crt_intersect, first_primes as family_first_primes, quadratic_residues, CongruenceFamily,
};

pub const CATALOG_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerificationLevel {
    /// Checked end to end by a command in this crate.
    FullyVerified,
    /// The computable ingredients are checked; the rest rests on published
    /// classifications of maximal subgroups.
    IngredientsVerified,
    /// Recorded only.
    CatalogOnly,
}

impl std::fmt::Display for VerificationLevel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            VerificationLevel::FullyVerified => "fully-verified",
            VerificationLevel::IngredientsVerified => "ingredients-verified",
            VerificationLevel::CatalogOnly => "catalog-only",
        })
    }
}

/// What the family ranges over.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FamilySpec {
    /// A single group.
    Fixed { instance: String },
    /// Primes `p` in a set of residue classes.
    Residues { family: CongruenceFamily },
    /// A condition on several parameters, not a single residue set.
    Parametric { condition: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExampleFamily {
    pub id: String,
    pub h_name: String,
    pub m_name: String,
    pub g_name: String,
    pub family: FamilySpec,
    pub verification_level: VerificationLevel,
    pub paper_source: String,
    pub notes: String,
    /// Command that checks this entry, if any.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verify_command: Option<String>,
    /// Elementary conditions whose intersection gives the stored residues.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub derivation: Vec<CongruenceFamily>,
}

impl ExampleFamily {
    pub fn residues(&self) -> Option<&CongruenceFamily> {
        match &self.family {
            FamilySpec::Residues { family } => Some(family),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonExample {
    pub id: String,
    pub chain: String,
    pub reason: String,
    pub paper_source: String,
}

/// The whole registry as one versioned document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Catalog {
    pub schema_version: u32,
    pub families: Vec<ExampleFamily>,
    pub non_examples: Vec<NonExample>,
}

impl Catalog {
    pub fn load() -> Self {
        Catalog {
            schema_version: CATALOG_SCHEMA_VERSION,
            families: list_families(),
            non_examples: non_examples(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("catalog serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, CatalogError> {
        let doc: Catalog =
            serde_json::from_str(text).map_err(|e| CatalogError::Schema(e.to_string()))?;
        if doc.schema_version != CATALOG_SCHEMA_VERSION {
            return Err(CatalogError::Schema(format!(
                "unsupported schema version {}",
                doc.schema_version
            )));
        }
        Ok(doc)
    }
}

fn residues(modulus: u64, rs: &[u64], label: &str) -> CongruenceFamily {
    CongruenceFamily::given(modulus, rs.iter().copied(), label).expect("valid stored family")
}

/// Expands `+-r mod m` into least nonnegative residues.
pub fn plus_minus(modulus: u64, rs: &[u64]) -> Vec<u64> {
    rs.iter()
        .flat_map(|&r| [r % modulus, (modulus - r % modulus) % modulus])
        .collect()
}

const DISCREPANCY: &str = "The worked n = 5 case asks for p = 1, 2, 4, 8, 16 mod 31 \
(powers of 2), while the general theorem asks only that p be a square mod d = 2^n - 1; \
mod 31 the powers of 2 are 5 of the 15 nonzero squares. Both readings are implemented \
and the discrepancy is left open.";

struct Entry<'a> {
    id: &'a str,
    h: &'a str,
    m: &'a str,
    g: &'a str,
    level: VerificationLevel,
    source: &'a str,
    notes: &'a str,
    command: Option<&'a str>,
}

impl Entry<'_> {
    fn build(self, family: FamilySpec, derivation: Vec<CongruenceFamily>) -> ExampleFamily {
        ExampleFamily {
            id: self.id.into(),
            h_name: self.h.into(),
            m_name: self.m.into(),
            g_name: self.g.into(),
            family,
            verification_level: self.level,
            paper_source: self.source.into(),
            notes: self.notes.into(),
            verify_command: self.command.map(Into::into),
            derivation,
        }
    }
}

fn fixed(instance: &str) -> FamilySpec {
    FamilySpec::Fixed {
        instance: instance.into(),
    }
}

fn in_classes(family: CongruenceFamily) -> FamilySpec {
    FamilySpec::Residues { family }
}

/// Every example family, in theorem order.
pub fn list_families() -> Vec<ExampleFamily> {
    use VerificationLevel::*;
    let l5_2_note = format!("Also requires epsilon * p = 3 mod 4 and p = +-1 mod 8. {DISCREPANCY}");
    vec![
        Entry {
            id: "m12",
            h: "A5 (transitive on 12 points)",
            m: "L2(11)",
            g: "M12",
            level: FullyVerified,
            source: "Theorem 1: \"Then $H$ lies in exactly two other subgroups of $G$, both lying in the single conjugacy class of maximal subgroups $L_2(11)$.\"",
            notes: "Interval computed exhaustively from explicit generators; certificate re-checkable.",
            command: Some("overgroups verify m12"),
        }
        .build(fixed("M12 of order 95040"), vec![]),
        Entry {
            id: "he",
            h: "(A5 x A5).2.2",
            m: "S4(4):2",
            g: "He",
            level: CatalogOnly,
            source: "Theorem 2: \"$H$ is contained in just two other subgroups of $G$, both lying in the single class of maximal subgroups isomorphic to $S_4(4){:}2$.\"",
            notes: "Held group of order 4030387200; beyond desk-scale computation.",
            command: None,
        }
        .build(fixed("He"), vec![]),
        Entry {
            id: "omega10",
            h: "M12",
            m: "A12",
            g: "Omega10-(2)",
            level: CatalogOnly,
            source: "Theorem 3: \"$H$ is contained in exactly two other subgroups of $G$, both lying in the single conjugacy class of subgroups isomorphic to $A_{12}$.\"",
            notes: "Relies on the corrected maximal subgroup list of Omega10-(2).",
            command: None,
        }
        .build(fixed("Omega10-(2)"), vec![]),
        Entry {
            id: "omega5_7",
            h: "L3(2)",
            m: "A7",
            g: "Omega5(7)",
            level: IngredientsVerified,
            source: "Theorem 4: \"Then $H$ is contained in exactly two other subgroups of $G$, both isomorphic to $A_7$, and lying in the same $G$-conjugacy class.\"",
            notes: "Checked: both Fano actions of L3(2) and A7 give 5-dimensional mod-7 modules with invariant nondegenerate forms, the L3(2) ones irreducible, and the point and line stabilizers are not conjugate. Class counts in Omega5(7) come from published tables.",
            command: Some("overgroups repmod l3_2_mod7"),
        }
        .build(fixed("Omega5(7)"), vec![]),
        Entry {
            id: "psl4",
            h: "L3(2)",
            m: "A7",
            g: "PSL4(p) = Omega6+(p)",
            level: IngredientsVerified,
            source: "Theorem 5: \"suppose that $p\\equiv 15,23,39\\bmod 56$\"",
            notes: "Residues re-derived from p = 7 mod 8 and p a square mod 7.",
            command: Some("overgroups derive --family psl4"),
        }
        .build(
            in_classes(residues(56, &[15, 23, 39], "psl4")),
            vec![residues(8, &[7], "p = 7 mod 8"), residues(7, &quadratic_residues(7), "p = 1, 2, 4 mod 7")],
        ),
        Entry {
            id: "psu4",
            h: "L3(2)",
            m: "A7",
            g: "PSU4(p) = Omega6-(p)",
            level: IngredientsVerified,
            source: "Theorem 6: \"suppose that $p\\equiv 17,33,41\\bmod 56$\"",
            notes: "Residues re-derived from p = 1 mod 8 and p a nonsquare mod 7.",
            command: Some("overgroups derive --family psu4"),
        }
        .build(
            in_classes(residues(56, &[17, 33, 41], "psu4")),
            vec![residues(8, &[1], "p = 1 mod 8"), residues(7, &[3, 5, 6], "p = 3, 5, 6 mod 7")],
        ),
        Entry {
            id: "repunit_special",
            h: "PGammaL_n(q)",
            m: "A_d",
            g: "Omega_{d-2}(d)",
            level: IngredientsVerified,
            source: "Theorem \"If $q$ is a prime power, and $d:=(q^n-1)/(q-1)$ is prime, with $d\\equiv 7\\bmod 8$ ...\" and the Lemma rewriting d = 7 mod 8 in terms of q and n",
            notes: "Checked: the mod-8 lemma by brute force, d-cycle reality in A_d against the group engine, and the prime tables for q = 5, q = 17 and n = 3, 7, 11, 19, 23, 31. The q = 5 entries n = 3407, 16519, 201359, 1888279 are cited, not recomputed.",
            command: Some("overgroups lemma-check --q-max 100 --n-max 50"),
        }
        .build(
            FamilySpec::Parametric {
                condition: "q a prime power, d = (q^n - 1)/(q - 1) prime, d = 7 mod 8".into(),
            },
            vec![],
        ),
        Entry {
            id: "omega14_plus",
            h: "A8",
            m: "A15",
            g: "Omega14+(p)",
            level: CatalogOnly,
            source: "Theorem 7: \"Let $p\\equiv 19,23,31,47\\bmod 60$, and let $G=\\Omega_{14}^+(p)$.\"",
            notes: "No elementary derivation of the classes is given; stored as quoted.",
            command: None,
        }
        .build(in_classes(residues(60, &[19, 23, 31, 47], "omega14_plus")), vec![]),
        Entry {
            id: "omega14_minus",
            h: "A8",
            m: "A15",
            g: "Omega14-(p)",
            level: CatalogOnly,
            source: "\"Exactly the same argument applies to the cases $p\\equiv 13,29,37,41\\bmod 60$ in $\\Omega_{14}^-(p)$.\"",
            notes: "Mirror of omega14_plus; stored as quoted.",
            command: None,
        }
        .build(in_classes(residues(60, &[13, 29, 37, 41], "omega14_minus")), vec![]),
        Entry {
            id: "l5_2_plus",
            h: "L5(2)",
            m: "A31",
            g: "Omega30+(p)",
            level: IngredientsVerified,
            source: "\"for $\\varepsilon=+$ we require $p\\equiv 39,47,63,95,159\\bmod 248$\"",
            notes: &l5_2_note,
            command: Some("overgroups derive --family l5_2_plus"),
        }
        .build(
            in_classes(residues(248, &[39, 47, 63, 95, 159], "l5_2_plus")),
            vec![
                residues(4, &[3], "p = 3 mod 4"),
                residues(8, &[1, 7], "p = +-1 mod 8"),
                residues(31, &[1, 2, 4, 8, 16], "p = 1, 2, 4, 8, 16 mod 31"),
            ],
        ),
        Entry {
            id: "l5_2_minus",
            h: "L5(2)",
            m: "A31",
            g: "Omega30-(p)",
            level: IngredientsVerified,
            source: "\"for $\\varepsilon=-$ we require $p\\equiv 1,33,97,225,233\\bmod248$\"",
            notes: &l5_2_note,
            command: Some("overgroups derive --family l5_2_minus"),
        }
        .build(
            in_classes(residues(248, &[1, 33, 97, 225, 233], "l5_2_minus")),
            vec![
                residues(4, &[1], "p = 1 mod 4"),
                residues(8, &[1, 7], "p = +-1 mod 8"),
                residues(31, &[1, 2, 4, 8, 16], "p = 1, 2, 4, 8, 16 mod 31"),
            ],
        ),
        Entry {
            id: "unbounded_rank",
            h: "L_n(2)",
            m: "A_d, d = 2^n - 1",
            g: "Omega_{d-1}^epsilon(p)",
            level: CatalogOnly,
            source: "Theorem 8: \"suppose that $p$ is a square modulo $d:=2^n-1$. If $n$ is odd, suppose also that $p\\equiv \\pm1\\bmod 8$.\"",
            notes: DISCREPANCY,
            command: None,
        }
        .build(
            FamilySpec::Parametric {
                condition: "n >= 3, epsilon * p = 3 mod 4, p a square mod 2^n - 1, and p = +-1 mod 8 when n is odd".into(),
            },
            vec![],
        ),
        Entry {
            id: "s14_j2",
            h: "J2",
            m: "S6(p)",
            g: "S14(p)",
            level: CatalogOnly,
            source: "Theorem 9: \"Let $p\\equiv \\pm11,\\pm19\\bmod 40$, and let $G=S_{14}(p)$.\"",
            notes: "+-11, +-19 mod 40 stored as least residues.",
            command: None,
        }
        .build(in_classes(residues(40, &plus_minus(40, &[11, 19]), "s14_j2")), vec![]),
        Entry {
            id: "s14_l213",
            h: "L2(13)",
            m: "S6(p)",
            g: "S14(p)",
            level: CatalogOnly,
            source: "Theorem 10: \"Let $p\\equiv \\pm3,\\pm27,\\pm29,\\pm35,\\pm43,\\pm51\\bmod 104$, and let $G=S_{14}(p)$.\"",
            notes: "Signed residues mod 104 stored as least residues.",
            command: None,
        }
        .build(
            in_classes(residues(104, &plus_minus(104, &[3, 27, 29, 35, 43, 51]), "s14_l213")),
            vec![],
        ),
    ]
}

/// Configurations that were considered and rejected.
pub fn non_examples() -> Vec<NonExample> {
    let ne = |id: &str, chain: &str, reason: &str, source: &str| NonExample {
        id: id.into(),
        chain: chain.into(),
        reason: reason.into(),
        paper_source: source.into(),
    };
    vec![
        ne(
            "l2_11_a11",
            "L2(11) < A11 < Omega10^epsilon(p)",
            "\"However, $L_2(11)$ is not maximal in $A_{11}$, so this fails.\"",
            "Discussion after Theorem 6",
        ),
        ne(
            "l3_3_omega11",
            "L3(3) < A13 < Omega11(13)",
            "\"$\\Omega_{11}(13)$ contains two classes of $L_3(3){:}2$, so that $L_3(3)$ embeds in both $A_{13}$ and $L_3(3){:}2$\"; so this case \"does not provide an example\" (d = 13 is 5 mod 8).",
            "Discussion before Theorem 4 and after the repunit Lemma",
        ),
        ne(
            "l4_2_omega13_3",
            "L4(2) = A8 < A15 < Omega13(3)",
            "\"There is one class of $A_8$, and two classes of $S_{15}$, in $\\Omega_{13}(3)$, so $A_8$ is not second maximal in this case.\"",
            "Discussion after Theorem 4",
        ),
        ne(
            "l4_2_omega13_5",
            "L4(2) = A8 < A15 < Omega13(5)",
            "\"There is one class of $A_{15}$, and two classes of $S_8$, in $\\Omega_{13}(5)$, so $A_8$ is contained in three maximal subgroups in this case.\"",
            "Discussion after Theorem 4",
        ),
        ne(
            "a5_s6p",
            "A5 < L2(p) < S6(p), p = +-11, +-19 mod 40",
            "\"the embedding of $2\\udot A_5$ in $Sp_6(p)$ also goes via the tensor product $Sp_2(p)\\circ GO_3(p)$, so this $A_5$ lies in more than two maximal subgroups of $Sp_6(p)$.\"",
            "Discussion before Theorem 9",
        ),
    ]
}

pub fn family(id: &str) -> Result<ExampleFamily, CatalogError> {
    list_families()
        .into_iter()
        .find(|f| f.id == id)
        .ok_or_else(|| CatalogError::UnknownId(id.into()))
}

/// Result of re-deriving a stored residue family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCheck {
    pub id: String,
    pub conditions: Vec<CongruenceFamily>,
    pub stored: CongruenceFamily,
    pub derived: CongruenceFamily,
    pub matches: bool,
}

/// Recomputes the residues of `id` from its elementary conditions.
pub fn cross_check(id: &str) -> Result<CrossCheck, CatalogError> {
    let entry = family(id)?;
    let stored = entry
        .residues()
        .cloned()
        .ok_or_else(|| CatalogError::NoDerivation(id.into()))?;
    if entry.derivation.is_empty() {
        return Err(CatalogError::NoDerivation(id.into()));
    }
    let derived = crt_intersect(&entry.derivation)?;
    Ok(CrossCheck {
        id: entry.id,
        matches: derived.same_classes(&stored),
        conditions: entry.derivation,
        stored,
        derived,
    })
}

/// The `k` smallest primes in the family `id`.
pub fn first_primes(id: &str, k: usize) -> Result<Vec<u64>, CatalogError> {
    let entry = family(id)?;
    match &entry.family {
        FamilySpec::Residues { family } => Ok(family_first_primes(family, k)),
        FamilySpec::Fixed { .. } => Err(CatalogError::FixedInstance(id.into())),
        FamilySpec::Parametric { .. } => Err(CatalogError::Parametric(id.into())),
    }
}

/// Elementary conditions of the unbounded-rank theorem for a given `n`,
/// reading "square mod d" literally. `plus` selects epsilon = +.
pub fn unbounded_rank_conditions(
    n: u32,
    plus: bool,
) -> Result<Vec<CongruenceFamily>, CatalogError> {
    if !(3..=20).contains(&n) {
        return Err(CatalogError::OutOfRange(format!(
            "n = {n} must lie in 3..=20"
        )));
    }
    let d = (1u64 << n) - 1;
    let units: Vec<u64> = quadratic_residues(d)
        .into_iter()
        .filter(|&r| num_integer::gcd(r, d) == 1)
        .collect();
    let mut conds = vec![
        residues(4, &[if plus { 3 } else { 1 }], "epsilon * p = 3 mod 4"),
        CongruenceFamily::given(d, units, format!("p a square mod {d}"))?,
    ];
    if n % 2 == 1 {
        conds.push(residues(8, &[1, 7], "p = +-1 mod 8"));
    }
    Ok(conds)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_contents() {
        let fams = list_families();
        assert_eq!(fams.len(), 14);
        let ids: Vec<&str> = fams.iter().map(|f| f.id.as_str()).collect();
        assert_eq!(
            ids,
            [
                "m12",
                "he",
                "omega10",
                "omega5_7",
                "psl4",
                "psu4",
                "repunit_special",
                "omega14_plus",
                "omega14_minus",
                "l5_2_plus",
                "l5_2_minus",
                "unbounded_rank",
                "s14_j2",
                "s14_l213"
            ]
        );
        assert_eq!(
            family("m12").unwrap().verification_level,
            VerificationLevel::FullyVerified
        );
        assert_eq!(
            family("he").unwrap().verification_level,
            VerificationLevel::CatalogOnly
        );
        assert!(family("nope").is_err());
    }

    #[test]
    fn fully_verified_entries_have_commands() {
        for f in list_families() {
            if f.verification_level == VerificationLevel::FullyVerified {
                assert!(f.verify_command.is_some(), "{}", f.id);
            }
        }
    }

    #[test]
    fn signed_residues_expand() {
        let j2 = family("s14_j2").unwrap();
        assert_eq!(j2.residues().unwrap().residues(), &[11, 19, 21, 29]);
        let l213 = family("s14_l213").unwrap();
        assert_eq!(
            l213.residues().unwrap().residues(),
            &[3, 27, 29, 35, 43, 51, 53, 61, 69, 75, 77, 101]
        );
    }

    #[test]
    fn derivations_match() {
        for id in ["psl4", "psu4", "l5_2_plus", "l5_2_minus"] {
            let c = cross_check(id).unwrap();
            assert!(c.matches, "{id}: {} vs {}", c.derived, c.stored);
        }
        assert_eq!(
            cross_check("l5_2_minus").unwrap().derived.residues(),
            &[1, 33, 97, 225, 233]
        );
        assert!(matches!(
            cross_check("omega14_plus"),
            Err(CatalogError::NoDerivation(_))
        ));
        assert!(matches!(
            cross_check("m12"),
            Err(CatalogError::NoDerivation(_))
        ));
        assert!(matches!(cross_check("x"), Err(CatalogError::UnknownId(_))));
    }

    #[test]
    fn first_primes_examples() {
        assert_eq!(first_primes("psl4", 3).unwrap(), vec![23, 71, 79]);
        assert_eq!(first_primes("s14_j2", 2).unwrap(), vec![11, 19]);
        assert!(matches!(
            first_primes("m12", 3),
            Err(CatalogError::FixedInstance(_))
        ));
    }

    #[test]
    fn non_example_registry() {
        let ne = non_examples();
        assert_eq!(ne.len(), 5);
        let l33 = ne.iter().find(|n| n.id == "l3_3_omega11").unwrap();
        assert!(l33.reason.contains("two classes of $L_3(3){:}2$"));
        let a5 = ne.iter().find(|n| n.id == "a5_s6p").unwrap();
        assert!(a5.reason.contains("tensor product"));
        assert!(ne
            .iter()
            .all(|n| !n.chain.is_empty() && !n.reason.is_empty()));
    }

    #[test]
    fn square_reading_is_weaker_than_powers_of_two() {
        let squares = crt_intersect(&unbounded_rank_conditions(5, true).unwrap()).unwrap();
        let stored = family("l5_2_plus").unwrap();
        let stored = stored.residues().unwrap();
        assert_eq!(squares.modulus(), 248);
        assert_eq!(squares.residues().len(), 15);
        assert!(stored.residues().iter().all(|&r| squares.contains(r)));
        assert!(!squares.same_classes(stored));
    }

    #[test]
    fn json_round_trip() {
        let cat = Catalog::load();
        let text = cat.to_json();
        assert_eq!(Catalog::from_json(&text).unwrap(), cat);
        assert!(Catalog::from_json("{}").is_err());
    }
}
