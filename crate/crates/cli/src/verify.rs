use std::fmt::Write;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use serde_json::json;

use overgroups::certificate::{audit, Certificate};
use overgroups::interval::{find_transitive_subgroups, verify_counterexample, TransitiveSearch};
use overgroups::permgroup::{GeneratorFile, GroupSpec, DEFAULT_ELEMENT_BOUND};

use crate::commands::{join, Outcome};

/// A group to search, and the order of the subgroups H to try in it.
struct Target {
    name: &'static str,
    file: &'static str,
    order: u64,
    subgroup_order: u64,
    claim: &'static str,
}

const TARGETS: &[Target] = &[Target {
    name: "m12",
    file: "m12.gens",
    order: 95040,
    subgroup_order: 60,
    claim: "m12-transitive-a5-boolean-rank-2-conjugate-tops",
}];

pub fn target_names() -> Vec<&'static str> {
    TARGETS.iter().map(|t| t.name).collect()
}

fn numbered(out: &Path, k: usize) -> PathBuf {
    if k == 0 {
        return out.to_path_buf();
    }
    let mut s = out.as_os_str().to_owned();
    s.push(format!(".{}", k + 1));
    PathBuf::from(s)
}

pub fn run(name: &str, data: &Path, out: Option<&Path>) -> anyhow::Result<Outcome> {
    let Some(target) = TARGETS.iter().find(|t| t.name == name) else {
        bail!("unknown target {name:?}");
    };
    let path = data.join(target.file);
    let file = GeneratorFile::read(&path)?;
    let spec = GroupSpec::from_file(target.name, file).with_expected_order(target.order);
    let group = spec.chain()?;

    let found =
        find_transitive_subgroups(&group, target.subgroup_order, TransitiveSearch::default())?;
    let mut text = format!(
        "{}: order {} on {} points\ntransitive subgroups of order {}: {} class(es)\n",
        target.name,
        group.order(),
        group.degree(),
        target.subgroup_order,
        found.len()
    );
    let mut ok = !found.is_empty();
    let mut results = Vec::new();
    for (k, h) in found.iter().enumerate() {
        let report = verify_counterexample(&group, &h.generators, DEFAULT_ELEMENT_BOUND)?;
        let cert =
            Certificate::from_report(target.claim, target.name, &group, &h.generators, &report);
        let verdict = report.verdict() && cert.all_passed();
        ok &= verdict;

        let gens: Vec<String> = h
            .generators
            .iter()
            .map(|g| g.to_cycle_string(true))
            .collect();
        writeln!(text, "H{} = <{}>", k + 1, gens.join(", ")).unwrap();
        writeln!(
            text,
            "  interval orders: {}",
            join(&report.lattice.orders())
        )
        .unwrap();
        writeln!(text, "  shape: {}", report.lattice.shape).unwrap();
        writeln!(
            text,
            "  H maximal in every top: {}",
            report.h_maximal_in_tops
        )
        .unwrap();
        match &report.conjugator {
            Some(g) => writeln!(text, "  conjugator: {}", g.to_cycle_string(true)).unwrap(),
            None => writeln!(text, "  conjugator: none").unwrap(),
        }
        let failed: Vec<&str> = cert
            .checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name.as_str())
            .collect();
        writeln!(
            text,
            "  certificate checks: {} run, {} failed",
            cert.checks.len(),
            failed.len()
        )
        .unwrap();

        let written = match out {
            Some(out) => {
                let p = numbered(out, k);
                fs::write(&p, cert.to_json())
                    .with_context(|| format!("writing {}", p.display()))?;
                writeln!(text, "  certificate written to {}", p.display()).unwrap();
                Some(p.display().to_string())
            }
            None => None,
        };
        writeln!(text, "  verdict: {}", if verdict { "PASS" } else { "FAIL" }).unwrap();
        results.push(json!({
            "subgroup_generators": h.generators.iter().map(|g| g.images()).collect::<Vec<_>>(),
            "orders": report.lattice.orders().iter().map(ToString::to_string).collect::<Vec<_>>(),
            "shape": report.lattice.shape.to_string(),
            "h_maximal_in_tops": report.h_maximal_in_tops,
            "conjugator": report.conjugator.as_ref().map(|g| g.images()),
            "failed_checks": failed,
            "certificate": written,
            "verdict": verdict,
        }));
    }
    if found.is_empty() {
        text.push_str("nothing to verify\n");
    }
    let json = json!({
        "target": target.name,
        "group_order": group.order().to_string(),
        "subgroup_order": target.subgroup_order,
        "results": results,
        "passed": ok,
    });
    Ok(Outcome { ok, text, json })
}

pub fn cert_check(path: &Path) -> anyhow::Result<Outcome> {
    let raw = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let cert = match Certificate::from_json(&raw) {
        Ok(c) => c,
        Err(e) => {
            return Ok(Outcome {
                ok: false,
                text: format!("FAIL {e}\n"),
                json: json!({
                    "file": path.display().to_string(),
                    "passed": false,
                    "checks": [{ "name": "schema", "passed": false, "detail": e }],
                }),
            })
        }
    };
    let outcomes = audit(&cert);
    let ok = outcomes.iter().all(|c| c.passed);
    let mut text = String::new();
    for c in &outcomes {
        if c.passed {
            writeln!(text, "ok   {}", c.name).unwrap();
        } else {
            writeln!(text, "FAIL {}: {}", c.name, c.detail).unwrap();
        }
    }
    let failed = outcomes.iter().filter(|c| !c.passed).count();
    writeln!(text, "{} checks, {} failed", outcomes.len(), failed).unwrap();
    let checks: Vec<_> = outcomes
        .iter()
        .map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail }))
        .collect();
    let json = json!({ "file": path.display().to_string(), "passed": ok, "checks": checks });
    Ok(Outcome { ok, text, json })
}
