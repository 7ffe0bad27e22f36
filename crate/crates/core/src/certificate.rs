//! Re-checkable witnesses for Boolean rank-2 overgroup intervals.
//!
//! A certificate records the group, the subgroup `H`, every node of the
//! interval with its order, the Hasse edges and a conjugator between the two
//! tops. [`audit`] re-validates all of it from scratch with fresh stabilizer
//! chains, using only membership tests and orders.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::interval::{
    containment, covering_edges, shape_from_edges, CounterexampleReport, Shape, SubgroupNode,
};
use crate::permgroup::{Permutation, StabilizerChain};

pub const CERTIFICATE_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupRecord {
    pub name: String,
    pub degree: usize,
    /// Image lists, 0-based.
    pub generators: Vec<Vec<u32>>,
    /// Decimal.
    pub order: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeRecord {
    pub generators: Vec<Vec<u32>>,
    pub order: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub schema_version: u32,
    pub claim: String,
    pub group: GroupRecord,
    pub subgroup_generators: Vec<Vec<u32>>,
    pub interval_nodes: Vec<NodeRecord>,
    pub hasse_edges: Vec<[usize; 2]>,
    pub shape: String,
    pub conjugator: Option<Vec<u32>>,
    pub checks: Vec<CheckRecord>,
}

fn images(gens: &[Permutation]) -> Vec<Vec<u32>> {
    gens.iter().map(|g| g.images().to_vec()).collect()
}

impl Certificate {
    /// Records `report` and fills `checks` by auditing the result.
    pub fn from_report(
        claim: impl Into<String>,
        group_name: impl Into<String>,
        group: &StabilizerChain,
        h: &[Permutation],
        report: &CounterexampleReport,
    ) -> Self {
        let lattice = &report.lattice;
        let mut cert = Certificate {
            schema_version: CERTIFICATE_SCHEMA_VERSION,
            claim: claim.into(),
            group: GroupRecord {
                name: group_name.into(),
                degree: group.degree(),
                generators: images(group.generators()),
                order: group.order().to_string(),
            },
            subgroup_generators: images(h),
            interval_nodes: lattice
                .nodes
                .iter()
                .map(|n| NodeRecord {
                    generators: images(&n.generators),
                    order: n.order.to_string(),
                })
                .collect(),
            hasse_edges: lattice.edges.iter().map(|&(i, j)| [i, j]).collect(),
            shape: lattice.shape.to_string(),
            conjugator: report.conjugator.as_ref().map(|g| g.images().to_vec()),
            checks: Vec::new(),
        };
        cert.checks = audit(&cert)
            .into_iter()
            .filter(|c| c.name != RECORDED_CHECKS)
            .map(|c| CheckRecord {
                name: c.name,
                passed: c.passed,
            })
            .collect();
        cert
    }

    /// Pretty JSON with a trailing newline; identical input gives identical
    /// bytes.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("certificate serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, String> {
        serde_json::from_str(text).map_err(|e| format!("schema: {e}"))
    }

    pub fn all_passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.passed)
    }
}

/// One named audit step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

const RECORDED_CHECKS: &str = "recorded-checks";

struct Auditor {
    out: Vec<CheckOutcome>,
}

impl Auditor {
    fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) -> bool {
        self.out.push(CheckOutcome {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
        passed
    }
}

fn parse_gens(degree: usize, raw: &[Vec<u32>]) -> Result<Vec<Permutation>, String> {
    if raw.is_empty() {
        return Err("no generators".into());
    }
    raw.iter()
        .map(|imgs| {
            if imgs.len() != degree {
                return Err(format!("expected {degree} images, got {}", imgs.len()));
            }
            Permutation::from_images(imgs.clone()).map_err(|e| e.to_string())
        })
        .collect()
}

fn parse_order(text: &str) -> Result<BigUint, String> {
    if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("{text:?} is not a decimal integer"));
    }
    text.parse()
        .map_err(|_| format!("{text:?} is not a decimal integer"))
}

/// Re-validates every claim in `cert`. The result lists each check by name;
/// the certificate is sound iff all pass.
pub fn audit(cert: &Certificate) -> Vec<CheckOutcome> {
    let mut a = Auditor { out: Vec::new() };
    a.check(
        "schema-version",
        cert.schema_version == CERTIFICATE_SCHEMA_VERSION,
        format!("version {}", cert.schema_version),
    );
    let degree = cert.group.degree;

    let group = match parse_gens(degree, &cert.group.generators)
        .and_then(|g| StabilizerChain::new(&g).map_err(|e| e.to_string()))
    {
        Ok(chain) => {
            a.check("group-generators", true, "");
            chain
        }
        Err(e) => {
            a.check("group-generators", false, e);
            return a.out;
        }
    };
    match parse_order(&cert.group.order) {
        Ok(o) => a.check(
            "group-order",
            o == group.order(),
            format!("recorded {o}, computed {}", group.order()),
        ),
        Err(e) => a.check("group-order", false, e),
    };

    let h = match parse_gens(degree, &cert.subgroup_generators) {
        Ok(h) => {
            a.check("subgroup-generators", true, "");
            h
        }
        Err(e) => {
            a.check("subgroup-generators", false, e);
            return a.out;
        }
    };
    a.check(
        "subgroup-in-group",
        group.contains_all(&h),
        "H generators sift to the identity",
    );

    // fresh chains for every node
    let mut nodes: Vec<Option<SubgroupNode>> = Vec::new();
    for (i, rec) in cert.interval_nodes.iter().enumerate() {
        let node = parse_gens(degree, &rec.generators)
            .and_then(|g| SubgroupNode::new(g).map_err(|e| e.to_string()));
        let node = match node {
            Ok(n) => {
                a.check(format!("node-{i}-generators"), true, "");
                n
            }
            Err(e) => {
                a.check(format!("node-{i}-generators"), false, e);
                nodes.push(None);
                continue;
            }
        };
        match parse_order(&rec.order) {
            Ok(o) => a.check(
                format!("node-{i}-order"),
                o == node.order,
                format!("recorded {o}, computed {}", node.order),
            ),
            Err(e) => a.check(format!("node-{i}-order"), false, e),
        };
        a.check(
            format!("node-{i}-in-group"),
            group.contains_all(&node.generators),
            "",
        );
        a.check(
            format!("node-{i}-contains-subgroup"),
            node.chain.contains_all(&h),
            "",
        );
        nodes.push(Some(node));
    }
    let Some(nodes) = nodes.into_iter().collect::<Option<Vec<_>>>() else {
        return a.out;
    };
    if !a.check(
        "node-count",
        nodes.len() >= 2,
        format!("{} nodes", nodes.len()),
    ) {
        return a.out;
    }

    let sorted = nodes.windows(2).all(|w| {
        (&w[0].order, w[0].sorted_generator_images())
            < (&w[1].order, w[1].sorted_generator_images())
    });
    a.check(
        "nodes-sorted",
        sorted,
        "ascending by (order, sorted generator images)",
    );
    let bottom = &nodes[0];
    let h_node = SubgroupNode::new(h.clone());
    a.check(
        "bottom-is-subgroup",
        h_node.is_ok_and(|hn| hn.same_subgroup(bottom)),
        "node 0 equals <H>",
    );
    a.check(
        "top-is-group",
        nodes.last().is_some_and(|t| t.order == group.order()),
        "last node has the group order",
    );
    let distinct =
        (0..nodes.len()).all(|i| (i + 1..nodes.len()).all(|j| !nodes[i].same_subgroup(&nodes[j])));
    a.check("nodes-distinct", distinct, "");

    let edges = covering_edges(&containment(&nodes));
    let recorded: BTreeSet<(usize, usize)> =
        cert.hasse_edges.iter().map(|e| (e[0], e[1])).collect();
    a.check(
        "hasse-edges",
        edges == recorded,
        format!("computed {edges:?}"),
    );
    let shape = shape_from_edges(nodes.len(), &edges);
    a.check(
        "shape",
        cert.shape == shape.to_string(),
        format!("recorded {}, computed {shape}", cert.shape),
    );
    a.check("shape-is-boolean-rank-2", shape == Shape::BooleanRank2, "");

    let tops: Vec<&SubgroupNode> = edges
        .iter()
        .filter(|&&(_, j)| j == nodes.len() - 1)
        .map(|&(i, _)| &nodes[i])
        .collect();
    let conj_ok = match (&cert.conjugator, tops.as_slice()) {
        (Some(imgs), [m1, m2]) => match parse_gens(degree, std::slice::from_ref(imgs)) {
            Ok(g) => {
                let g = &g[0];
                group.contains(g)
                    && m1.order == m2.order
                    && m1
                        .generators
                        .iter()
                        .all(|x| m2.chain.contains(&x.conjugate_by(g)))
            }
            Err(_) => false,
        },
        _ => false,
    };
    a.check("conjugator", conj_ok, "g in G with M1^g = M2");

    let names: Vec<&str> = a.out.iter().map(|c| c.name.as_str()).collect();
    let recorded_ok = !cert.checks.is_empty()
        && cert
            .checks
            .iter()
            .all(|c| c.passed && names.contains(&c.name.as_str()))
        && names
            .iter()
            .all(|n| cert.checks.iter().any(|c| c.name == *n));
    a.check(
        RECORDED_CHECKS,
        recorded_ok,
        "every recorded check is reproduced and passed",
    );
    a.out
}

/// Names of the failed checks, empty when the certificate is sound.
pub fn failed_checks(cert: &Certificate) -> Vec<String> {
    audit(cert)
        .into_iter()
        .filter(|c| !c.passed)
        .map(|c| c.name)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::verify_counterexample;

    /// `Z6` on 5 points: over the trivial group its interval is a diamond
    /// whose tops, of orders 2 and 3, are not conjugate.
    fn z6() -> (StabilizerChain, Vec<Permutation>) {
        let g = Permutation::from_cycles(5, &[&[0, 1], &[2, 3, 4]]).unwrap();
        (
            StabilizerChain::new(&[g]).unwrap(),
            vec![Permutation::identity(5)],
        )
    }

    #[test]
    fn non_conjugate_tops_fail_only_the_conjugator_check() {
        let (g, h) = z6();
        let report = verify_counterexample(&g, &h, 1000).unwrap();
        let cert = Certificate::from_report("z6", "Z6", &g, &h, &report);
        assert!(!cert.all_passed());
        let failed = failed_checks(&cert);
        assert!(failed.contains(&"conjugator".to_string()));
        assert!(failed.contains(&"recorded-checks".to_string()));
        assert!(!failed.contains(&"hasse-edges".to_string()));
        assert_eq!(cert.shape, "BooleanRank2");
    }

    #[test]
    fn json_round_trip_is_exact() {
        let (g, h) = z6();
        let report = verify_counterexample(&g, &h, 1000).unwrap();
        let cert = Certificate::from_report("z6", "Z6", &g, &h, &report);
        let text = cert.to_json();
        let back = Certificate::from_json(&text).unwrap();
        assert_eq!(back, cert);
        assert_eq!(back.to_json(), text);
        assert!(Certificate::from_json("").is_err());
    }

    #[test]
    fn tampered_order_is_named() {
        let (g, h) = z6();
        let report = verify_counterexample(&g, &h, 1000).unwrap();
        let mut cert = Certificate::from_report("z6", "Z6", &g, &h, &report);
        cert.interval_nodes[1].order = "7".into();
        assert!(failed_checks(&cert).contains(&"node-1-order".to_string()));
        cert.interval_nodes[1].order = "x".into();
        assert!(failed_checks(&cert).contains(&"node-1-order".to_string()));
    }
}
