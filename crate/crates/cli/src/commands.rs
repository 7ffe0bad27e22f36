use std::fmt::Write;

use anyhow::{bail, Context};
use serde_json::{json, Value};

use overgroups::catalog::{self, FamilySpec};
use overgroups::congruence::{
    enumerate_primes, lemma_mismatches, lemma_residue_filter, search_q_for_fixed_n,
    search_repunit_primes, ResidueFilter,
};

/// What a subcommand produced. `ok` decides the exit status.
pub struct Outcome {
    pub ok: bool,
    pub text: String,
    pub json: Value,
}

impl Outcome {
    pub fn ok(text: String, json: Value) -> Self {
        Outcome {
            ok: true,
            text,
            json,
        }
    }
}

pub fn join<T: ToString>(xs: &[T]) -> String {
    if xs.is_empty() {
        return "(none)".into();
    }
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(", ")
}

pub fn primes(id: &str, limit: u64) -> anyhow::Result<Outcome> {
    let entry = catalog::family(id)?;
    let Some(fam) = entry.residues() else {
        bail!(
            "family {id:?} is not a residue family ({})",
            kind(&entry.family)
        );
    };
    let ps = enumerate_primes(fam, limit);
    let text = format!("{id}: p = {fam}, p <= {limit}\n{}\n", join(&ps));
    let json = json!({ "family": id, "residues": fam, "limit": limit, "primes": ps });
    Ok(Outcome::ok(text, json))
}

fn kind(spec: &FamilySpec) -> &'static str {
    match spec {
        FamilySpec::Fixed { .. } => "fixed instance",
        FamilySpec::Residues { .. } => "residues",
        FamilySpec::Parametric { .. } => "parametric",
    }
}

pub fn derive(id: &str) -> anyhow::Result<Outcome> {
    let check = catalog::cross_check(id)?;
    let mut text = String::new();
    for c in &check.conditions {
        writeln!(text, "  {}", c.label()).unwrap();
    }
    if check.matches {
        writeln!(text, "{} — matches paper", check.derived).unwrap();
    } else {
        writeln!(
            text,
            "{} — differs from paper ({})",
            check.derived, check.stored
        )
        .unwrap();
    }
    Ok(Outcome {
        ok: check.matches,
        text,
        json: serde_json::to_value(&check)?,
    })
}

pub fn repunit_search(q: u64, n_max: u32, special: bool) -> anyhow::Result<Outcome> {
    if q < 2 {
        bail!("q must be at least 2");
    }
    let hits = search_repunit_primes(q, n_max, special);
    let ns: Vec<u32> = hits.iter().map(|h| h.n).collect();
    let mut text = format!(
        "q = {q}, n <= {n_max}{}: n = {}\n",
        if special { ", repunit 7 mod 8" } else { "" },
        join(&ns)
    );
    for h in &hits {
        writeln!(
            text,
            "  n = {:<5} {:>5} digits  {:?}",
            h.n, h.digits, h.primality
        )
        .unwrap();
    }
    let json = json!({ "q": q, "n_max": n_max, "special": special, "hits": hits });
    Ok(Outcome::ok(text, json))
}

fn parse_filter(spec: &str) -> anyhow::Result<ResidueFilter> {
    let (rs, m) = spec
        .split_once(':')
        .context("filter must look like `1,3:8`")?;
    let modulus: u64 = m.trim().parse().context("bad modulus")?;
    if modulus == 0 {
        bail!("modulus must be positive");
    }
    let residues = rs
        .split(',')
        .map(|r| r.trim().parse::<u64>())
        .collect::<Result<Vec<_>, _>>()
        .context("bad residue")?;
    Ok(ResidueFilter::new(modulus, residues))
}

pub fn fixed_n_search(
    n: u32,
    q_max: u64,
    filter: Option<&str>,
    no_filter: bool,
) -> anyhow::Result<Outcome> {
    if n < 2 {
        bail!("n must be at least 2");
    }
    let filter = match (filter, no_filter) {
        (Some(spec), _) => Some(parse_filter(spec)?),
        (None, true) => None,
        (None, false) => Some(lemma_residue_filter(n as u64).with_context(|| {
            format!("no odd q makes the repunit 7 mod 8 for n = {n}; pass --filter or --no-filter")
        })?),
    };
    let qs = search_q_for_fixed_n(n, q_max, filter.as_ref());
    let filter_text = filter.as_ref().map_or(String::new(), |f| {
        format!(", q = {} (mod {})", join(&f.residues), f.modulus)
    });
    let text = format!("n = {n}, q <= {q_max}{filter_text}: {}\n", join(&qs));
    let json = json!({ "n": n, "q_max": q_max, "filter": filter, "q": qs });
    Ok(Outcome::ok(text, json))
}

pub fn lemma_check(q_max: u64, n_max: u64) -> anyhow::Result<Outcome> {
    let (checked, bad) = lemma_mismatches(q_max, n_max);
    let mut text = format!(
        "checked {checked} pairs (q <= {q_max}, n <= {n_max}): {} mismatches\n",
        bad.len()
    );
    for (q, n) in &bad {
        writeln!(text, "  q = {q}, n = {n}").unwrap();
    }
    let json = json!({ "q_max": q_max, "n_max": n_max, "checked": checked, "mismatches": bad });
    Ok(Outcome {
        ok: bad.is_empty(),
        text,
        json,
    })
}

pub fn catalog_list(markdown: bool) -> anyhow::Result<Outcome> {
    let cat = catalog::Catalog::load();
    let text = if markdown {
        catalog::catalog_markdown(&cat)
    } else {
        catalog::catalog_text(&cat)
    };
    Ok(Outcome::ok(text, serde_json::to_value(&cat)?))
}

pub fn catalog_show(id: &str) -> anyhow::Result<Outcome> {
    let entry = catalog::family(id)?;
    Ok(Outcome::ok(
        catalog::family_text(&entry),
        serde_json::to_value(&entry)?,
    ))
}

pub fn catalog_non_examples() -> anyhow::Result<Outcome> {
    let list = catalog::non_examples();
    let text = list.iter().map(catalog::non_example_text).collect();
    Ok(Outcome::ok(text, serde_json::to_value(&list)?))
}
