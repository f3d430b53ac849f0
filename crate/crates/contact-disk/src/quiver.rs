//! The disk quiver and its path category.
//!
//! Vertices are the subsets `S` of `{1..n-1}` (ordered monomials `e_S`);
//! an arrow with label `p` runs from `e_S` to `e_T` exactly when `T` is `S`
//! with the disjoint pair `{p, p+1}` adjoined. The path category imposes the
//! commutation of arrows with disjoint labels, which leaves every hom space
//! at most one-dimensional. Hom classes are therefore stored as plain
//! (source, target) pairs.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QuiverError {
    #[error("vertices live on different disks: n = {0} vs n = {1}")]
    SizeMismatch(usize, usize),
    #[error("morphisms are not composable: first ends at {0:?}, second starts at {1:?}")]
    NotComposable(Vertex, Vertex),
    #[error("no morphism from {0:?} to {1:?}")]
    NoMorphism(Vertex, Vertex),
}

/// A vertex `e_S`, encoded as a bitmask with bit `p - 1` for `p` in `S`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    n: usize,
    mask: u32,
}

impl Vertex {
    pub fn new(n: usize, subset: &[usize]) -> Self {
        let mut mask = 0u32;
        for &p in subset {
            assert!((1..n).contains(&p), "index {p} out of 1..{n}");
            mask |= 1 << (p - 1);
        }
        Vertex { n, mask }
    }

    pub fn from_mask(n: usize, mask: u32) -> Self {
        debug_assert_eq!(mask >> (n - 1), 0, "mask exceeds index range");
        Vertex { n, mask }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    pub fn subset(&self) -> Vec<usize> {
        (1..self.n).filter(|p| self.contains(*p)).collect()
    }

    pub fn contains(&self, p: usize) -> bool {
        p >= 1 && p < self.n && self.mask >> (p - 1) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    /// Complement within `{1..n-1}`.
    pub fn complement(&self) -> Self {
        let full = (1u32 << (self.n - 1)) - 1;
        Vertex {
            n: self.n,
            mask: full & !self.mask,
        }
    }
}

impl fmt::Debug for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mask == 0 {
            return write!(f, "e{{}}");
        }
        let s: Vec<String> = self.subset().iter().map(usize::to_string).collect();
        write!(f, "e{{{}}}", s.join(","))
    }
}

/// An arrow `theta_p : e_S -> e_{S + {p, p+1}}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub p: usize,
    pub source: Vertex,
    pub target: Vertex,
}

/// The full quiver on `2^(n-1)` vertices.
#[derive(Debug, Clone)]
pub struct Quiver {
    n: usize,
    pub vertices: Vec<Vertex>,
    pub arrows: Vec<Arrow>,
}

pub fn build_quiver(n: usize) -> Quiver {
    assert!(n >= 2, "the quiver needs n >= 2");
    let vertices: Vec<Vertex> = (0u32..1 << (n - 1)).map(|m| Vertex::from_mask(n, m)).collect();
    let mut arrows = Vec::new();
    for &v in &vertices {
        for p in 1..n - 1 {
            if !v.contains(p) && !v.contains(p + 1) {
                let target = Vertex::from_mask(n, v.mask | 1 << (p - 1) | 1 << p);
                arrows.push(Arrow {
                    p,
                    source: v,
                    target,
                });
            }
        }
    }
    Quiver {
        n,
        vertices,
        arrows,
    }
}

impl Quiver {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph quiver {\n  rankdir=LR;\n");
        for v in &self.vertices {
            s.push_str(&format!("  v{} [label=\"{:?}\"];\n", v.mask(), v));
        }
        for a in &self.arrows {
            s.push_str(&format!(
                "  v{} -> v{} [label=\"t{}\"];\n",
                a.source.mask(),
                a.target.mask(),
                a.p
            ));
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct ArrowJson {
            p: usize,
            src: Vec<usize>,
            tgt: Vec<usize>,
        }
        #[derive(Serialize)]
        struct QuiverJson {
            n: usize,
            vertices: Vec<Vec<usize>>,
            arrows: Vec<ArrowJson>,
        }
        serde_json::to_value(QuiverJson {
            n: self.n,
            vertices: self.vertices.iter().map(Vertex::subset).collect(),
            arrows: self
                .arrows
                .iter()
                .map(|a| ArrowJson {
                    p: a.p,
                    src: a.source.subset(),
                    tgt: a.target.subset(),
                })
                .collect(),
        })
        .expect("serialization cannot fail")
    }
}

/// Dimension of the hom space from `src` to `tgt`: one when `tgt` contains
/// `src` and every maximal run of consecutive integers in the difference has
/// even length, zero otherwise.
pub fn hom_dim(src: Vertex, tgt: Vertex) -> usize {
    assert_eq!(src.n(), tgt.n(), "vertices on different disks");
    if src.mask & !tgt.mask != 0 {
        return 0;
    }
    let mut diff = tgt.mask & !src.mask;
    while diff != 0 {
        let start = diff.trailing_zeros();
        let run = (diff >> start).trailing_ones();
        if run % 2 != 0 {
            return 0;
        }
        diff &= !(((1u32 << run) - 1) << start);
    }
    1
}

/// The basis element of a one-dimensional hom space.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct MorphismClass {
    pub source: Vertex,
    pub target: Vertex,
}

impl fmt::Debug for MorphismClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}->{:?}", self.source, self.target)
    }
}

impl MorphismClass {
    pub fn new(source: Vertex, target: Vertex) -> Result<Self, QuiverError> {
        if source.n() != target.n() {
            return Err(QuiverError::SizeMismatch(source.n(), target.n()));
        }
        if hom_dim(source, target) == 0 {
            return Err(QuiverError::NoMorphism(source, target));
        }
        Ok(MorphismClass { source, target })
    }

    pub fn identity(v: Vertex) -> Self {
        MorphismClass {
            source: v,
            target: v,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target
    }
}

/// Composite of `f` then `g`. Whenever both factors exist the composite
/// class exists: gluing even runs onto even runs keeps every run even.
pub fn compose(f: MorphismClass, g: MorphismClass) -> Result<MorphismClass, QuiverError> {
    if f.target != g.source {
        return Err(QuiverError::NotComposable(f.target, g.source));
    }
    MorphismClass::new(f.source, g.target)
}

/// The contravariant involution on vertices: complement within `{1..n-1}`.
pub fn tian_dual(v: Vertex) -> Vertex {
    v.complement()
}

/// The involution on arrows: `theta_p : e_S -> e_T` goes to
/// `theta_p : e_{T^c} -> e_{S^c}`.
pub fn tian_dual_arrow(a: &Arrow) -> Arrow {
    Arrow {
        p: a.p,
        source: a.target.complement(),
        target: a.source.complement(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{HashMap, HashSet};

    #[test]
    fn quiver_counts() {
        let q3 = build_quiver(3);
        assert_eq!(q3.vertices.len(), 4);
        assert_eq!(q3.arrows.len(), 1);
        assert_eq!(q3.arrows[0].p, 1);
        assert_eq!(q3.arrows[0].source, Vertex::new(3, &[]));
        assert_eq!(q3.arrows[0].target, Vertex::new(3, &[1, 2]));

        let q4 = build_quiver(4);
        assert_eq!(q4.vertices.len(), 8);
        assert_eq!(q4.arrows.len(), 4);
        let expected: HashSet<(usize, Vec<usize>, Vec<usize>)> = [
            (1, vec![], vec![1, 2]),
            (2, vec![], vec![2, 3]),
            (2, vec![1], vec![1, 2, 3]),
            (1, vec![3], vec![1, 2, 3]),
        ]
        .into_iter()
        .collect();
        let got: HashSet<_> = q4
            .arrows
            .iter()
            .map(|a| (a.p, a.source.subset(), a.target.subset()))
            .collect();
        assert_eq!(got, expected);

        assert_eq!(build_quiver(5).vertices.len(), 16);
        assert_eq!(build_quiver(5).arrows.len(), 12);
    }

    #[test]
    fn hom_dim_examples() {
        assert_eq!(hom_dim(Vertex::new(3, &[]), Vertex::new(3, &[1, 2])), 1);
        assert_eq!(hom_dim(Vertex::new(4, &[]), Vertex::new(4, &[1, 2, 3])), 0);
        assert_eq!(
            hom_dim(Vertex::new(5, &[]), Vertex::new(5, &[1, 2, 3, 4])),
            1
        );
        // Identity classes exist.
        for mask in 0u32..8 {
            let v = Vertex::from_mask(4, mask);
            assert_eq!(hom_dim(v, v), 1);
        }
        // Not a superset.
        assert_eq!(hom_dim(Vertex::new(4, &[1]), Vertex::new(4, &[2, 3])), 0);
    }

    /// All directed paths from `src` to `tgt` in the quiver, as label words.
    fn enumerate_paths(q: &Quiver, src: Vertex, tgt: Vertex) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut stack = vec![(src, Vec::new())];
        while let Some((v, word)) = stack.pop() {
            if v == tgt {
                out.push(word.clone());
                continue;
            }
            for a in q.arrows.iter().filter(|a| a.source == v) {
                // Prune: must stay inside tgt.
                if a.target.mask() & !tgt.mask() == 0 {
                    let mut w = word.clone();
                    w.push(a.p);
                    stack.push((a.target, w));
                }
            }
        }
        out
    }

    /// Path-quotient dimension oracle: number of equivalence classes of
    /// paths under swapping adjacent letters (all arrow labels occurring in
    /// one path are pairwise non-adjacent integers, so swaps are always
    /// admissible). Classes are detected by sorting.
    fn path_quotient_dim(q: &Quiver, src: Vertex, tgt: Vertex) -> usize {
        let paths = enumerate_paths(q, src, tgt);
        let mut classes = HashSet::new();
        for mut p in paths {
            p.sort_unstable();
            classes.insert(p);
        }
        classes.len()
    }

    #[test]
    fn hom_dim_matches_path_oracle() {
        for n in 2..=6 {
            let q = build_quiver(n);
            for &a in &q.vertices {
                for &b in &q.vertices {
                    let dim = hom_dim(a, b);
                    let oracle = path_quotient_dim(&q, a, b);
                    assert_eq!(dim, oracle, "n={n} {a:?} -> {b:?}");
                    assert!(oracle <= 1, "hom spaces must be at most a line");
                }
            }
        }
    }

    #[test]
    fn all_parallel_paths_agree() {
        // Any two paths between the same endpoints sort to the same word.
        for n in 2..=6 {
            let q = build_quiver(n);
            for &a in &q.vertices {
                for &b in &q.vertices {
                    let mut sorted: Vec<Vec<usize>> = enumerate_paths(&q, a, b)
                        .into_iter()
                        .map(|mut p| {
                            p.sort_unstable();
                            p
                        })
                        .collect();
                    sorted.dedup();
                    assert!(sorted.len() <= 1);
                }
            }
        }
    }

    #[test]
    fn composition_is_total_and_associative() {
        for n in 2..=5 {
            let q = build_quiver(n);
            let mut classes = Vec::new();
            for &a in &q.vertices {
                for &b in &q.vertices {
                    if hom_dim(a, b) == 1 {
                        classes.push(MorphismClass { source: a, target: b });
                    }
                }
            }
            for &f in &classes {
                // identity laws
                let idl = compose(MorphismClass::identity(f.source), f).unwrap();
                let idr = compose(f, MorphismClass::identity(f.target)).unwrap();
                assert_eq!(idl, f);
                assert_eq!(idr, f);
                for &g in &classes {
                    if f.target != g.source {
                        continue;
                    }
                    let fg = compose(f, g).expect("composites always exist");
                    for &h in &classes {
                        if g.target != h.source {
                            continue;
                        }
                        let gh = compose(g, h).unwrap();
                        assert_eq!(compose(fg, h).unwrap(), compose(f, gh).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn commuting_arrows_compose_to_the_same_class() {
        // theta_3 then theta_1 equals theta_1 then theta_3 out of the empty
        // vertex for n = 5: both composites are the class to e{1,2,3,4}.
        let n = 5;
        let e = Vertex::new(n, &[]);
        let t13 = Vertex::new(n, &[1, 2]);
        let t34 = Vertex::new(n, &[3, 4]);
        let full = Vertex::new(n, &[1, 2, 3, 4]);
        let via_a = compose(
            MorphismClass::new(e, t13).unwrap(),
            MorphismClass::new(t13, full).unwrap(),
        )
        .unwrap();
        let via_b = compose(
            MorphismClass::new(e, t34).unwrap(),
            MorphismClass::new(t34, full).unwrap(),
        )
        .unwrap();
        assert_eq!(via_a, via_b);
    }

    #[test]
    fn tian_duality() {
        // n = 3: complement swaps {} with {1,2} and {1} with {2}.
        assert_eq!(tian_dual(Vertex::new(3, &[])), Vertex::new(3, &[1, 2]));
        assert_eq!(tian_dual(Vertex::new(3, &[1])), Vertex::new(3, &[2]));
        for n in 2..=6 {
            let q = build_quiver(n);
            for &v in &q.vertices {
                assert_eq!(tian_dual(tian_dual(v)), v);
            }
            // Arrows map bijectively onto arrows.
            let arrow_set: HashSet<Arrow> = q.arrows.iter().copied().collect();
            let dual_set: HashSet<Arrow> = q.arrows.iter().map(tian_dual_arrow).collect();
            assert_eq!(arrow_set, dual_set);
            assert_eq!(dual_set.len(), q.arrows.len());
        }
        // The single arrow of the n = 3 quiver is self-dual.
        let q3 = build_quiver(3);
        assert_eq!(tian_dual_arrow(&q3.arrows[0]), q3.arrows[0]);
    }

    #[test]
    fn arrow_count_formula() {
        // Independent count: pairs (S, p) with {p, p+1} disjoint from S.
        for n in 3..=7 {
            let q = build_quiver(n);
            let mut count = 0;
            for mask in 0u32..1 << (n - 1) {
                for p in 1..n - 1 {
                    if mask >> (p - 1) & 3 == 0 {
                        count += 1;
                    }
                }
            }
            assert_eq!(q.arrows.len(), count);
        }
    }

    #[test]
    fn dot_and_json_exports_mention_every_arrow() {
        let q = build_quiver(4);
        let dot = q.to_dot();
        assert_eq!(dot.matches(" -> ").count(), q.arrows.len());
        let json = q.to_json();
        assert_eq!(json["arrows"].as_array().unwrap().len(), 4);
        assert_eq!(json["vertices"].as_array().unwrap().len(), 8);
    }
}
