//! Plain-text generator files.
//!
//! ```text
//! # comment
//! degree 12 base 1
//! (1,2,3,4,5,6,7,8,9,10,11)
//! (3,7,11,8)(4,10,5,6)
//! ```
//!
//! The header fixes the degree and whether points are written 0- or
//! 1-based. Each following non-comment line is one permutation.

use std::path::Path;

use num_bigint::BigUint;

use super::{parse_cycles, PermError, Permutation, StabilizerChain};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorFile {
    pub degree: usize,
    pub one_based: bool,
    pub generators: Vec<Permutation>,
}

impl GeneratorFile {
    pub fn parse(text: &str) -> Result<Self, PermError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, strip_comment(l).trim()))
            .filter(|(_, l)| !l.is_empty());
        let (line_no, header) = lines.next().ok_or(PermError::BadHeader {
            line: 0,
            text: String::new(),
        })?;
        let bad_header = || PermError::BadHeader {
            line: line_no,
            text: header.to_string(),
        };
        let words: Vec<&str> = header.split_whitespace().collect();
        let (degree, one_based) = match words.as_slice() {
            ["degree", n, "base", b] => {
                let degree: usize = n.parse().map_err(|_| bad_header())?;
                let one_based = match *b {
                    "0" => false,
                    "1" => true,
                    _ => return Err(bad_header()),
                };
                (degree, one_based)
            }
            _ => return Err(bad_header()),
        };
        if degree == 0 {
            return Err(bad_header());
        }
        let generators = lines
            .map(|(line, text)| {
                parse_cycles(text, degree, one_based).map_err(|e| PermError::AtLine {
                    line,
                    source: Box::new(e),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(GeneratorFile {
            degree,
            one_based,
            generators,
        })
    }

    pub fn read(path: &Path) -> Result<Self, PermError> {
        let text = std::fs::read_to_string(path).map_err(|e| PermError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        Self::parse(&text)
    }

    /// Canonical text; `parse(to_text())` reproduces `self` and canonical
    /// input survives `to_text(parse())` byte for byte.
    pub fn to_text(&self) -> String {
        let mut out = format!("degree {} base {}\n", self.degree, u8::from(self.one_based));
        for g in &self.generators {
            out.push_str(&g.to_cycle_string(self.one_based));
            out.push('\n');
        }
        out
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// A named generating set with an optional known order.
#[derive(Clone, Debug)]
pub struct GroupSpec {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<Permutation>,
    pub expected_order: Option<BigUint>,
}

impl GroupSpec {
    pub fn new(name: impl Into<String>, generators: Vec<Permutation>) -> Self {
        let degree = generators.first().map_or(0, Permutation::degree);
        GroupSpec {
            name: name.into(),
            degree,
            generators,
            expected_order: None,
        }
    }

    pub fn with_expected_order(mut self, order: impl Into<BigUint>) -> Self {
        self.expected_order = Some(order.into());
        self
    }

    pub fn from_file(name: impl Into<String>, file: GeneratorFile) -> Self {
        GroupSpec {
            name: name.into(),
            degree: file.degree,
            generators: file.generators,
            expected_order: None,
        }
    }

    /// Builds the stabilizer chain, checking the expected order if present.
    pub fn chain(&self) -> Result<StabilizerChain, PermError> {
        let chain = StabilizerChain::new(&self.generators)?;
        if let Some(expected) = &self.expected_order {
            let actual = chain.order();
            if &actual != expected {
                return Err(PermError::OrderMismatch {
                    name: self.name.clone(),
                    expected: expected.to_string(),
                    actual: actual.to_string(),
                });
            }
        }
        Ok(chain)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const M12_FILE: &str = "degree 12 base 1\n\
        (1,2,3,4,5,6,7,8,9,10,11)\n\
        (3,7,11,8)(4,10,5,6)\n\
        (1,12)(2,11)(3,6)(4,8)(5,9)(7,10)\n";

    #[test]
    fn canonical_text_round_trips_bytewise() {
        let file = GeneratorFile::parse(M12_FILE).unwrap();
        assert_eq!(file.to_text(), M12_FILE);
        assert_eq!(GeneratorFile::parse(&file.to_text()).unwrap(), file);
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = "# M12\n\ndegree 4 base 0  # zero based\n(0,1) (2,3)\n   \n()\n";
        let file = GeneratorFile::parse(text).unwrap();
        assert_eq!(file.degree, 4);
        assert!(!file.one_based);
        assert_eq!(file.generators.len(), 2);
        assert_eq!(file.to_text(), "degree 4 base 0\n(0,1)(2,3)\n()\n");
    }

    #[test]
    fn bad_headers_are_rejected() {
        for text in [
            "",
            "degree x base 1\n",
            "degree 4 base 2\n",
            "deg 4\n",
            "degree 0 base 0\n",
        ] {
            assert!(
                matches!(GeneratorFile::parse(text), Err(PermError::BadHeader { .. })),
                "{text:?}"
            );
        }
    }

    #[test]
    fn bad_generator_line_reports_line_number() {
        let err = GeneratorFile::parse("degree 3 base 1\n(1,2)\n(1,4)\n").unwrap_err();
        assert!(matches!(err, PermError::AtLine { line: 3, .. }), "{err}");
    }

    #[test]
    fn expected_order_is_checked() {
        let file = GeneratorFile::parse(M12_FILE).unwrap();
        let spec = GroupSpec::from_file("M12", file).with_expected_order(95040u32);
        assert_eq!(spec.chain().unwrap().order_u64(), Some(95040));
        let wrong = spec.clone().with_expected_order(7920u32);
        assert!(matches!(
            wrong.chain(),
            Err(PermError::OrderMismatch { .. })
        ));
    }
}
