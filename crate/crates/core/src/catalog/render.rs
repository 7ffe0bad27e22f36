use std::fmt::Write;

use super::{Catalog, ExampleFamily, FamilySpec, NonExample};

fn family_summary(spec: &FamilySpec) -> String {
    match spec {
        FamilySpec::Fixed { instance } => format!("fixed: {instance}"),
        FamilySpec::Residues { family } => format!("p = {family}"),
        FamilySpec::Parametric { condition } => condition.clone(),
    }
}

pub fn family_text(f: &ExampleFamily) -> String {
    let mut s = String::new();
    writeln!(s, "{}: {} < {} < {}", f.id, f.h_name, f.m_name, f.g_name).unwrap();
    writeln!(s, "  family:       {}", family_summary(&f.family)).unwrap();
    writeln!(s, "  verification: {}", f.verification_level).unwrap();
    if let Some(cmd) = &f.verify_command {
        writeln!(s, "  command:      {cmd}").unwrap();
    }
    if !f.derivation.is_empty() {
        let conds: Vec<String> = f.derivation.iter().map(|c| c.label().to_string()).collect();
        writeln!(s, "  derived from: {}", conds.join("; ")).unwrap();
    }
    writeln!(s, "  source:       {}", f.paper_source).unwrap();
    writeln!(s, "  notes:        {}", f.notes).unwrap();
    s
}

pub fn non_example_text(n: &NonExample) -> String {
    format!(
        "{}: {}\n  reason: {}\n  source: {}\n",
        n.id, n.chain, n.reason, n.paper_source
    )
}

/// One line per family.
pub fn catalog_text(cat: &Catalog) -> String {
    let width = cat.families.iter().map(|f| f.id.len()).max().unwrap_or(0);
    let mut s = String::new();
    for f in &cat.families {
        writeln!(
            s,
            "{:<width$}  {:<20}  {}",
            f.id,
            f.verification_level.to_string(),
            family_summary(&f.family)
        )
        .unwrap();
    }
    s
}

fn md_escape(text: &str) -> String {
    text.replace('|', "\\|")
}

pub fn catalog_markdown(cat: &Catalog) -> String {
    let mut s = String::from("## Example families\n\n");
    s.push_str("| id | H < M < G | family | verification |\n|---|---|---|---|\n");
    for f in &cat.families {
        writeln!(
            s,
            "| `{}` | {} < {} < {} | {} | {} |",
            f.id,
            md_escape(&f.h_name),
            md_escape(&f.m_name),
            md_escape(&f.g_name),
            md_escape(&family_summary(&f.family)),
            f.verification_level
        )
        .unwrap();
    }
    s.push_str("\n## Non-examples\n\n| id | chain | reason |\n|---|---|---|\n");
    for n in &cat.non_examples {
        writeln!(
            s,
            "| `{}` | {} | {} |",
            n.id,
            md_escape(&n.chain),
            md_escape(&n.reason)
        )
        .unwrap();
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_every_entry() {
        let cat = Catalog::load();
        let text = catalog_text(&cat);
        assert_eq!(text.lines().count(), cat.families.len());
        assert!(text.contains("p = 15, 23, 39 (mod 56)"));
        let md = catalog_markdown(&cat);
        assert!(md.contains("| `m12` |"));
        assert!(md.contains("`a5_s6p`"));
        let one = family_text(&cat.families[4]);
        assert!(one.contains("derived from: p = 7 mod 8; p = 1, 2, 4 mod 7"));
    }
}
