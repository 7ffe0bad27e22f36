use std::fmt::Write;

use anyhow::bail;
use serde_json::json;

use overgroups::permgroup::groups;
use overgroups::repmod::{
    deleted_module, fano_actions, fano_report, invariant_gram, is_irreducible, permutation_module,
    proper_invariant_subspace, RepModError, DEFAULT_LINE_BOUND,
};
use overgroups::Module;

use crate::commands::Outcome;

struct Case {
    name: &'static str,
    about: &'static str,
    build: fn() -> Result<Module, RepModError>,
    dim: usize,
    irreducible: bool,
    form: bool,
}

const CASES: &[Case] = &[
    Case {
        name: "l3_2_mod7",
        about: "L3(2) on the 7 Fano points, doubly-deleted module over GF(7)",
        build: || deleted_module(&fano_actions().0, 7),
        dim: 5,
        irreducible: true,
        form: true,
    },
    Case {
        name: "l3_2_lines_mod7",
        about: "L3(2) on the 7 Fano lines, doubly-deleted module over GF(7)",
        build: || deleted_module(&fano_actions().1, 7),
        dim: 5,
        irreducible: true,
        form: true,
    },
    Case {
        name: "a7_mod7",
        about: "A7 on 7 points, doubly-deleted module over GF(7)",
        build: || deleted_module(&groups::alternating(7), 7),
        dim: 5,
        irreducible: true,
        form: true,
    },
    Case {
        name: "l3_2_mod3",
        about: "L3(2) on the 7 Fano points, deleted module over GF(3)",
        build: || deleted_module(&fano_actions().0, 3),
        dim: 6,
        irreducible: true,
        form: true,
    },
    Case {
        name: "l3_2_perm_mod3",
        about: "L3(2) on the 7 Fano points, full permutation module over GF(3)",
        build: || permutation_module(&fano_actions().0, 3),
        dim: 7,
        irreducible: false,
        form: true,
    },
];

pub fn case_names() -> Vec<&'static str> {
    CASES.iter().map(|c| c.name).chain(["fano"]).collect()
}

pub fn run(name: &str) -> anyhow::Result<Outcome> {
    if name == "fano" {
        return fano();
    }
    let Some(case) = CASES.iter().find(|c| c.name == name) else {
        bail!("unknown case {name:?}");
    };
    let module = (case.build)()?;
    let irreducible = is_irreducible(&module, DEFAULT_LINE_BOUND)?;
    let gram = invariant_gram(&module);
    let sub = if irreducible {
        None
    } else {
        proper_invariant_subspace(&module)?
    };

    let mut summary = format!("dim {}, ", module.dim);
    match &sub {
        None => summary.push_str("irreducible"),
        Some(s) => write!(
            summary,
            "reducible (invariant subspace of dim {})",
            s.rank()
        )
        .unwrap(),
    }
    summary.push_str(if gram.is_some() {
        ", invariant nondegenerate symmetric form"
    } else {
        ", no invariant nondegenerate form known"
    });

    let mut text = format!("{}: {}\n{summary}\n", case.name, case.about);
    writeln!(text, "1-dim subspaces: {}", module.line_count()).unwrap();
    if let Some(g) = gram {
        writeln!(text, "gram matrix:\n{g}").unwrap();
    }
    if let Some(s) = &sub {
        writeln!(text, "invariant subspace basis:").unwrap();
        for row in s.basis() {
            writeln!(text, "  {row:?}").unwrap();
        }
    }

    let mut problems = Vec::new();
    if module.dim != case.dim {
        problems.push(format!("expected dim {}", case.dim));
    }
    if irreducible != case.irreducible {
        problems.push(format!("expected irreducible = {}", case.irreducible));
    }
    if gram.is_some() != case.form {
        problems.push(format!("expected invariant form = {}", case.form));
    }
    for p in &problems {
        writeln!(text, "MISMATCH: {p}").unwrap();
    }
    let json = json!({
        "case": case.name,
        "field": module.field(),
        "dim": module.dim,
        "irreducible": irreducible,
        "lines": module.line_count().to_string(),
        "gram": gram.map(|g| g.to_rows()),
        "invariant_subspace": sub.map(|s| s.basis()),
        "summary": summary,
        "mismatches": problems,
    });
    Ok(Outcome {
        ok: problems.is_empty(),
        text,
        json,
    })
}

fn fano() -> anyhow::Result<Outcome> {
    let r = fano_report()?;
    let ok = r.point_order == 168
        && r.line_order == 168
        && r.diagonal_order == 168
        && r.points_two_transitive
        && r.lines_two_transitive
        && r.stabilizer_order == 24
        && !r.stabilizers_conjugate;
    let text = format!(
        "fano: L3(2) on points and on lines of the Fano plane\n\
         orders: points {}, lines {}, both together {}\n\
         2-transitive: points {}, lines {}\n\
         point and line stabilizers: order {}, conjugate {}\n",
        r.point_order,
        r.line_order,
        r.diagonal_order,
        r.points_two_transitive,
        r.lines_two_transitive,
        r.stabilizer_order,
        r.stabilizers_conjugate
    );
    let json = json!({
        "case": "fano",
        "point_order": r.point_order,
        "line_order": r.line_order,
        "diagonal_order": r.diagonal_order,
        "points_two_transitive": r.points_two_transitive,
        "lines_two_transitive": r.lines_two_transitive,
        "stabilizer_order": r.stabilizer_order,
        "stabilizers_conjugate": r.stabilizers_conjugate,
    });
    Ok(Outcome { ok, text, json })
}
