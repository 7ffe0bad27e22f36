//! The Fano plane, built from GF(2)^3.

use crate::permgroup::{find_conjugator, PermError, Permutation, StabilizerChain};

/// 3x3 matrices over GF(2) as row bitmasks; row `i` is the image of `e_i`.
type Mat2 = [u8; 3];

/// `e_0 -> e_0 + e_1`.
const TRANSVECTION: Mat2 = [0b011, 0b010, 0b100];
/// Multiplication by `x` in GF(2)[x]/(x^3 + x + 1).
const SINGER: Mat2 = [0b010, 0b100, 0b011];

fn apply(m: &Mat2, v: u8) -> u8 {
    (0..3)
        .filter(|i| v >> i & 1 == 1)
        .fold(0, |acc, i| acc ^ m[i])
}

/// The 7 lines as sorted point triples (points are `v - 1` for nonzero
/// `v` in GF(2)^3); line `w - 1` is the kernel of the functional `w`.
pub fn fano_lines() -> Vec<[u32; 3]> {
    (1u8..8)
        .map(|w| {
            let pts: Vec<u32> = (1u8..8)
                .filter(|&v| (v & w).count_ones() % 2 == 0)
                .map(|v| v as u32 - 1)
                .collect();
            [pts[0], pts[1], pts[2]]
        })
        .collect()
}

fn on_points(m: &Mat2) -> Permutation {
    let images = (1u8..8).map(|v| apply(m, v) as u32 - 1).collect();
    Permutation::from_images(images).expect("invertible matrix")
}

fn on_lines(g: &Permutation, lines: &[[u32; 3]]) -> Permutation {
    let images = lines
        .iter()
        .map(|line| {
            let mut img = line.map(|x| g.apply(x as usize) as u32);
            img.sort_unstable();
            lines
                .iter()
                .position(|l| *l == img)
                .expect("lines map to lines") as u32
        })
        .collect();
    Permutation::from_images(images).expect("bijection on lines")
}

/// Generators of L3(2) acting on the 7 points and on the 7 lines. The
/// `i`-th generators of the two lists are the same group element.
pub fn fano_actions() -> (Vec<Permutation>, Vec<Permutation>) {
    let lines = fano_lines();
    let points: Vec<Permutation> = [TRANSVECTION, SINGER].iter().map(on_points).collect();
    let line_action = points.iter().map(|g| on_lines(g, &lines)).collect();
    (points, line_action)
}

/// Generators on points followed by lines, degree 14.
pub fn diagonal_action() -> Vec<Permutation> {
    let (pts, lns) = fano_actions();
    pts.iter()
        .zip(&lns)
        .map(|(a, b)| {
            let images = a
                .images()
                .iter()
                .copied()
                .chain(b.images().iter().map(|&x| x + 7))
                .collect();
            Permutation::from_images(images).expect("disjoint union")
        })
        .collect()
}

/// Facts about the two actions, all computed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FanoReport {
    pub point_order: u64,
    pub line_order: u64,
    /// Order of the group acting on points and lines together; equal to the
    /// others exactly when the generator correspondence is an isomorphism.
    pub diagonal_order: u64,
    pub points_two_transitive: bool,
    pub lines_two_transitive: bool,
    pub stabilizer_order: u64,
    /// Whether a point stabilizer is conjugate to a line stabilizer.
    pub stabilizers_conjugate: bool,
}

fn two_transitive(chain: &StabilizerChain) -> Result<bool, PermError> {
    let gens = chain.generators();
    let n = chain.degree();
    if !crate::permgroup::is_transitive(gens, n) {
        return Ok(false);
    }
    let stab = chain.point_stabilizer(0)?;
    Ok(crate::permgroup::orbit(&stab, 1).len() == n - 1)
}

pub fn fano_report() -> Result<FanoReport, PermError> {
    let (pts, lns) = fano_actions();
    let p = StabilizerChain::new(&pts)?;
    let l = StabilizerChain::new(&lns)?;
    let diag = StabilizerChain::new(&diagonal_action())?;
    let point_stab = diag.point_stabilizer(0)?;
    let line_stab = StabilizerChain::new(&diag.point_stabilizer(7)?)?;
    let conj = find_conjugator(&diag, &point_stab, &line_stab, 1_000)?;
    Ok(FanoReport {
        point_order: p.order_u64().unwrap_or(0),
        line_order: l.order_u64().unwrap_or(0),
        diagonal_order: diag.order_u64().unwrap_or(0),
        points_two_transitive: two_transitive(&p)?,
        lines_two_transitive: two_transitive(&l)?,
        stabilizer_order: line_stab.order_u64().unwrap_or(0),
        stabilizers_conjugate: conj.is_some(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plane_axioms() {
        let lines = fano_lines();
        assert_eq!(lines.len(), 7);
        for a in 0..7u32 {
            assert_eq!(lines.iter().filter(|l| l.contains(&a)).count(), 3);
            for b in a + 1..7 {
                let through = lines
                    .iter()
                    .filter(|l| l.contains(&a) && l.contains(&b))
                    .count();
                assert_eq!(through, 1, "{a} {b}");
            }
        }
    }

    #[test]
    fn two_actions() {
        let r = fano_report().unwrap();
        assert_eq!(
            (r.point_order, r.line_order, r.diagonal_order),
            (168, 168, 168)
        );
        assert!(r.points_two_transitive && r.lines_two_transitive);
        assert_eq!(r.stabilizer_order, 24);
        assert!(!r.stabilizers_conjugate);
    }

    #[test]
    fn deleted_modules_of_the_point_action() {
        use crate::repmod::{deleted_module, invariant_gram, is_irreducible, DEFAULT_LINE_BOUND};
        let (pts, _) = fano_actions();
        let m7 = deleted_module(&pts, 7u32).unwrap();
        assert_eq!(m7.dim, 5);
        assert!(invariant_gram(&m7).is_some());
        assert_eq!(is_irreducible(&m7, DEFAULT_LINE_BOUND), Ok(true));
        let m3 = deleted_module(&pts, 3u32).unwrap();
        assert_eq!(m3.dim, 6);
    }

    #[test]
    fn point_stabilizers_within_one_action_are_conjugate() {
        let diag = StabilizerChain::new(&diagonal_action()).unwrap();
        let a = diag.point_stabilizer(0).unwrap();
        let b = StabilizerChain::new(&diag.point_stabilizer(3).unwrap()).unwrap();
        assert!(find_conjugator(&diag, &a, &b, 1_000).unwrap().is_some());
    }
}
