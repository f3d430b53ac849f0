//! One-sided twisted complexes over the disk quiver category.
//!
//! The ambient theory is ungraded over the two-element field, so a twisted
//! complex is an ordered list of vertices together with a strictly
//! upper-triangular matrix `p` of hom-class coefficients satisfying
//! `p^2 = 0`, and the differential on a hom space is `d(f) = p_y f + f p_x`.
//! Cones, contractibility, homotopy equivalence, the distinguished-triangle
//! test and Gaussian elimination of identity components all live here.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gf2::{BitMatrix, BitVector};
use crate::quiver::{hom_dim, Vertex};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TcError {
    #[error("entry ({0},{1}) lies on or below the diagonal")]
    NotOneSided(usize, usize),
    #[error("no morphism exists for entry ({0},{1})")]
    IllegalEntry(usize, usize),
    #[error("p^2 has a nonzero entry at ({0},{1})")]
    MaurerCartanViolation(usize, usize),
    #[error("complexes live on different disks: n = {0} vs n = {1}")]
    SizeMismatch(usize, usize),
    #[error("morphism is not closed")]
    NotClosed,
    #[error("triangle maps are not cyclically composable")]
    NotComposable,
    #[error("morphism entry ({0},{1}) has no underlying hom class")]
    BadMorphismEntry(usize, usize),
    #[error("invalid twisted complex encoding: {0}")]
    BadEncoding(String),
}

/// A one-sided twisted complex. The zero object is the empty complex.
#[derive(Clone, PartialEq, Eq)]
pub struct TwistedComplex {
    n: usize,
    objects: Vec<Vertex>,
    /// `p[i][j]` is the coefficient of the hom class `objects[i] ->
    /// objects[j]`; nonzero entries require `i < j` and an existing class.
    p: Vec<Vec<bool>>,
}

impl std::fmt::Debug for TwistedComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "TC[{:?}; p=", self.objects)?;
        let mut first = true;
        for (i, j) in self.entries() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "({i},{j})")?;
            first = false;
        }
        write!(f, "]")
    }
}

impl TwistedComplex {
    /// Validates and builds a twisted complex.
    pub fn make(
        n: usize,
        objects: Vec<Vertex>,
        entries: &[(usize, usize)],
    ) -> Result<Self, TcError> {
        let m = objects.len();
        for v in &objects {
            if v.n() != n {
                return Err(TcError::SizeMismatch(n, v.n()));
            }
        }
        let mut p = vec![vec![false; m]; m];
        for &(i, j) in entries {
            if i >= j || j >= m {
                return Err(TcError::NotOneSided(i, j));
            }
            if hom_dim(objects[i], objects[j]) == 0 {
                return Err(TcError::IllegalEntry(i, j));
            }
            p[i][j] = true;
        }
        let tc = TwistedComplex { n, objects, p };
        if let Some((i, k)) = tc.p_squared_violation() {
            return Err(TcError::MaurerCartanViolation(i, k));
        }
        Ok(tc)
    }

    /// The empty (zero) complex.
    pub fn zero(n: usize) -> Self {
        TwistedComplex {
            n,
            objects: vec![],
            p: vec![],
        }
    }

    pub fn single(v: Vertex) -> Self {
        TwistedComplex {
            n: v.n(),
            objects: vec![v],
            p: vec![vec![false]],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn objects(&self) -> &[Vertex] {
        &self.objects
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn entry(&self, i: usize, j: usize) -> bool {
        self.p[i][j]
    }

    pub fn entries(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            for j in 0..self.len() {
                if self.p[i][j] {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// First nonzero entry of `p^2`, if any. Since all hom spaces are lines,
    /// the `(i,k)` entry is the parity of the number of middle indices.
    fn p_squared_violation(&self) -> Option<(usize, usize)> {
        let m = self.len();
        for i in 0..m {
            for k in i + 2..m {
                let mut acc = false;
                for j in i + 1..k {
                    acc ^= self.p[i][j] && self.p[j][k];
                }
                if acc {
                    return Some((i, k));
                }
            }
        }
        None
    }

    /// Direct sum, `self` first.
    pub fn direct_sum(&self, other: &Self) -> Result<Self, TcError> {
        if self.n != other.n {
            return Err(TcError::SizeMismatch(self.n, other.n));
        }
        let mut objects = self.objects.clone();
        objects.extend_from_slice(&other.objects);
        let (a, b) = (self.len(), other.len());
        let mut p = vec![vec![false; a + b]; a + b];
        for i in 0..a {
            for j in 0..a {
                p[i][j] = self.p[i][j];
            }
        }
        for i in 0..b {
            for j in 0..b {
                p[a + i][a + j] = other.p[i][j];
            }
        }
        Ok(TwistedComplex {
            n: self.n,
            objects,
            p,
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct TcJson {
            n: usize,
            objects: Vec<Vec<usize>>,
            p: Vec<PEntry>,
        }
        serde_json::to_value(TcJson {
            n: self.n,
            objects: self.objects.iter().map(Vertex::subset).collect(),
            p: self.entries().iter().map(|&(i, j)| PEntry { i, j }).collect(),
        })
        .expect("serialization cannot fail")
    }

    pub fn from_json_str(s: &str) -> Result<Self, TcError> {
        #[derive(Deserialize)]
        struct TcJson {
            n: usize,
            objects: Vec<Vec<usize>>,
            p: Vec<PEntry>,
        }
        let raw: TcJson =
            serde_json::from_str(s).map_err(|e| TcError::BadEncoding(e.to_string()))?;
        if raw.n < 1 || raw.n > 31 {
            return Err(TcError::BadEncoding(format!("unsupported n = {}", raw.n)));
        }
        let mut objects = Vec::new();
        for s in &raw.objects {
            for &p in s {
                if p == 0 || p >= raw.n {
                    return Err(TcError::BadEncoding(format!(
                        "generator index {p} out of 1..{}",
                        raw.n
                    )));
                }
            }
            objects.push(Vertex::new(raw.n, s));
        }
        let entries: Vec<(usize, usize)> = raw.p.iter().map(|e| (e.i, e.j)).collect();
        Self::make(raw.n, objects, &entries)
    }
}

#[derive(Serialize, Deserialize)]
struct PEntry {
    i: usize,
    j: usize,
}

/// A matrix of hom-class coefficients between two twisted complexes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TcMorphism {
    pub source: TwistedComplex,
    pub target: TwistedComplex,
    /// `f[i][j]` is the coefficient on `source.objects[i] ->
    /// target.objects[j]`.
    f: Vec<Vec<bool>>,
}

impl TcMorphism {
    pub fn new(
        source: TwistedComplex,
        target: TwistedComplex,
        entries: &[(usize, usize)],
    ) -> Result<Self, TcError> {
        if source.n() != target.n() {
            return Err(TcError::SizeMismatch(source.n(), target.n()));
        }
        let mut f = vec![vec![false; target.len()]; source.len()];
        for &(i, j) in entries {
            if i >= source.len() || j >= target.len() {
                return Err(TcError::BadMorphismEntry(i, j));
            }
            if hom_dim(source.objects[i], target.objects[j]) == 0 {
                return Err(TcError::BadMorphismEntry(i, j));
            }
            f[i][j] = true;
        }
        Ok(TcMorphism { source, target, f })
    }

    pub fn zero(source: TwistedComplex, target: TwistedComplex) -> Result<Self, TcError> {
        Self::new(source, target, &[])
    }

    pub fn identity(x: &TwistedComplex) -> Self {
        let entries: Vec<(usize, usize)> = (0..x.len()).map(|i| (i, i)).collect();
        Self::new(x.clone(), x.clone(), &entries).expect("identity entries always exist")
    }

    pub fn entry(&self, i: usize, j: usize) -> bool {
        self.f[i][j]
    }

    pub fn entries(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.source.len() {
            for j in 0..self.target.len() {
                if self.f[i][j] {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.f.iter().all(|row| row.iter().all(|&b| !b))
    }

    /// Whether `d(f) = p_target f + f p_source` vanishes.
    pub fn is_closed(&self) -> bool {
        let hom = HomComplex::new(&self.source, &self.target);
        let v = hom.vector_of(self);
        hom.differential.mul_vector(&v).expect("basis sizes agree").is_zero()
    }
}

/// The hom complex between two twisted complexes: the allowed entry
/// positions form the basis, and the differential is `f -> p_y f + f p_x`.
pub struct HomComplex {
    pub basis: Vec<(usize, usize)>,
    index: HashMap<(usize, usize), usize>,
    pub differential: BitMatrix,
}

impl HomComplex {
    pub fn new(x: &TwistedComplex, y: &TwistedComplex) -> Self {
        assert_eq!(x.n(), y.n(), "hom complex needs matching disks");
        let mut basis = Vec::new();
        for i in 0..x.len() {
            for j in 0..y.len() {
                if hom_dim(x.objects[i], y.objects[j]) == 1 {
                    basis.push((i, j));
                }
            }
        }
        let index: HashMap<(usize, usize), usize> =
            basis.iter().enumerate().map(|(k, &b)| (b, k)).collect();
        let mut differential = BitMatrix::zeros(basis.len(), basis.len());
        for (col, &(i, j)) in basis.iter().enumerate() {
            // p_y f: follow f by every p-entry out of y_j.
            for k in 0..y.len() {
                if y.entry(j, k) {
                    let row = index[&(i, k)];
                    differential.toggle(row, col);
                }
            }
            // f p_x: precede f by every p-entry into x_i.
            for l in 0..x.len() {
                if x.entry(l, i) {
                    let row = index[&(l, j)];
                    differential.toggle(row, col);
                }
            }
        }
        HomComplex {
            basis,
            index,
            differential,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    fn vector_of(&self, f: &TcMorphism) -> BitVector {
        let mut v = BitVector::zeros(self.basis.len());
        for (i, j) in f.entries() {
            v.set(self.index[&(i, j)], true);
        }
        v
    }

    fn morphism_of(
        &self,
        v: &BitVector,
        x: &TwistedComplex,
        y: &TwistedComplex,
    ) -> TcMorphism {
        let entries: Vec<(usize, usize)> = v.iter_ones().map(|k| self.basis[k]).collect();
        TcMorphism::new(x.clone(), y.clone(), &entries).expect("basis entries are legal")
    }
}

/// `dim ker d - rank d` of the hom complex; nonnegative because `d^2 = 0`.
pub fn homology_dim(x: &TwistedComplex, y: &TwistedComplex) -> usize {
    let hom = HomComplex::new(x, y);
    let rank = hom.differential.rank();
    hom.dim() - 2 * rank
}

/// The cone of a closed morphism: source objects first, then target objects,
/// with `f` in the connecting block.
pub fn cone(f: &TcMorphism) -> Result<TwistedComplex, TcError> {
    if !f.is_closed() {
        return Err(TcError::NotClosed);
    }
    let x = &f.source;
    let y = &f.target;
    let (a, b) = (x.len(), y.len());
    let mut objects = x.objects().to_vec();
    objects.extend_from_slice(y.objects());
    let mut p = vec![vec![false; a + b]; a + b];
    for i in 0..a {
        for j in 0..a {
            p[i][j] = x.entry(i, j);
        }
    }
    for i in 0..b {
        for j in 0..b {
            p[a + i][a + j] = y.entry(i, j);
        }
    }
    for i in 0..a {
        for j in 0..b {
            p[i][a + j] = f.entry(i, j);
        }
    }
    let tc = TwistedComplex {
        n: x.n(),
        objects,
        p,
    };
    debug_assert!(tc.p_squared_violation().is_none(), "cone of a closed map");
    Ok(tc)
}

/// An object is contractible exactly when its identity is a boundary in the
/// endomorphism complex, i.e. `d(h) = 1` has a solution.
pub fn is_contractible(x: &TwistedComplex) -> bool {
    if x.is_empty() {
        return true;
    }
    let hom = HomComplex::new(x, x);
    let identity = hom.vector_of(&TcMorphism::identity(x));
    hom.differential
        .solve(&identity)
        .expect("square system")
        .is_some()
}

/// A closed morphism is a homotopy equivalence exactly when its cone is
/// contractible.
pub fn is_homotopy_equivalence(f: &TcMorphism) -> Result<bool, TcError> {
    Ok(is_contractible(&cone(f)?))
}

/// Distinguished-triangle test for a cyclically composable triple
/// `f : x -> y`, `g : y -> z`, `h : z -> x` of closed morphisms.
///
/// The triple is distinguished exactly when `g` extends over the cone of `f`
/// (which requires a null-homotopy `H` of `g f`) so that the double cone is
/// contractible. All extensions are searched: they differ by cycles in
/// `Hom(x, z)`.
pub fn is_distinguished(
    f: &TcMorphism,
    g: &TcMorphism,
    h: &TcMorphism,
) -> Result<bool, TcError> {
    let (x, y, z) = (&f.source, &f.target, &g.target);
    if g.source != *y || h.source != *z || h.target != *x {
        return Err(TcError::NotComposable);
    }
    if !f.is_closed() || !g.is_closed() || !h.is_closed() {
        return Err(TcError::NotClosed);
    }

    // g f as a vector in Hom(x, z).
    let hom_xz = HomComplex::new(x, z);
    let mut gf = BitVector::zeros(hom_xz.dim());
    for (i, j) in f.entries() {
        for (j2, k) in g.entries() {
            if j2 == j {
                let idx = hom_xz.index[&(i, k)];
                let cur = gf.get(idx);
                gf.set(idx, !cur);
            }
        }
    }

    // Null-homotopies H of g f: solutions of d(H) = g f.
    let Some(base) = hom_xz.differential.solve(&gf).expect("square system") else {
        return Ok(false);
    };
    let kernel = hom_xz.differential.kernel_basis();
    assert!(
        kernel.len() <= 20,
        "extension space too large to enumerate ({} cycles)",
        kernel.len()
    );
    for mask in 0u64..1 << kernel.len() {
        let mut hvec = base.clone();
        for (b, k) in kernel.iter().enumerate() {
            if mask >> b & 1 == 1 {
                hvec.xor_assign(k);
            }
        }
        let hmap = hom_xz.morphism_of(&hvec, x, z);
        // Extension of g over cone(f): H on the x block, g on the y block.
        let cone_f = cone(f)?;
        let mut entries: Vec<(usize, usize)> = hmap.entries();
        for (i, j) in g.entries() {
            entries.push((x.len() + i, j));
        }
        let gtilde = TcMorphism::new(cone_f, z.clone(), &entries)?;
        debug_assert!(gtilde.is_closed());
        if is_contractible(&cone(&gtilde)?) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Cancels identity components of `p` until none remain, producing a
/// homotopy-equivalent complex. Scan order is the lexicographically least
/// identity entry first, so the output is deterministic.
pub fn gaussian_eliminate(x: &TwistedComplex) -> TwistedComplex {
    let mut objects = x.objects().to_vec();
    let mut p = x.p.clone();
    loop {
        let m = objects.len();
        let Some((a, b)) = (0..m)
            .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
            .find(|&(i, j)| p[i][j] && objects[i] == objects[j])
        else {
            break;
        };
        // Cancel the pair (a, b): for every k -> b and a -> l, toggle k -> l.
        let ins: Vec<usize> = (0..m).filter(|&k| k != a && p[k][b]).collect();
        let outs: Vec<usize> = (0..m).filter(|&l| l != b && p[a][l]).collect();
        for &k in &ins {
            for &l in &outs {
                // A diagonal induction would need an identity entry (a, k)
                // with k < b, contradicting the lex-least scan order.
                debug_assert_ne!(k, l, "diagonal induction under lex-least scan");
                p[k][l] = !p[k][l];
            }
        }
        // Drop rows/columns a and b.
        let keep: Vec<usize> = (0..m).filter(|&i| i != a && i != b).collect();
        objects = keep.iter().map(|&i| objects[i]).collect();
        p = keep
            .iter()
            .map(|&i| keep.iter().map(|&j| p[i][j]).collect())
            .collect();

        // Induced entries may point against the stored order; restore strict
        // upper triangularity by a stable topological sort. Non-identity
        // classes strictly enlarge the vertex, so only identity entries can
        // tie, and those cannot form directed cycles once (a, b) is gone.
        let m = objects.len();
        let mut order: Vec<usize> = (0..m).collect();
        let mut sorted = Vec::with_capacity(m);
        let mut placed = vec![false; m];
        while sorted.len() < m {
            let pick = order
                .iter()
                .copied()
                .find(|&i| {
                    !placed[i]
                        && (0..m).all(|k| placed[k] || !p[k][i] || k == i)
                })
                .expect("cancellation cannot create directed cycles");
            placed[pick] = true;
            sorted.push(pick);
            order.retain(|&i| i != pick);
        }
        objects = sorted.iter().map(|&i| objects[i]).collect();
        p = sorted
            .iter()
            .map(|&i| sorted.iter().map(|&j| p[i][j]).collect())
            .collect();
    }
    let tc = TwistedComplex {
        n: x.n(),
        objects,
        p,
    };
    debug_assert!(
        tc.p_squared_violation().is_none(),
        "elimination preserves p^2 = 0"
    );
    tc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(n: usize, s: &[usize]) -> Vertex {
        Vertex::new(n, s)
    }

    fn cone_theta1() -> TwistedComplex {
        TwistedComplex::make(3, vec![v(3, &[]), v(3, &[1, 2])], &[(0, 1)]).unwrap()
    }

    #[test]
    fn make_validates() {
        // Single object, p = 0.
        assert!(TwistedComplex::make(3, vec![v(3, &[])], &[]).is_ok());
        // The cone of the quiver arrow is fine.
        assert!(TwistedComplex::make(3, vec![v(3, &[]), v(3, &[1, 2])], &[(0, 1)]).is_ok());
        // An identity after the arrow breaks the Maurer-Cartan equation.
        let bad = TwistedComplex::make(
            3,
            vec![v(3, &[]), v(3, &[1, 2]), v(3, &[1, 2])],
            &[(0, 1), (1, 2)],
        );
        assert_eq!(bad, Err(TcError::MaurerCartanViolation(0, 2)));
        // Lower-triangular entries are rejected.
        assert_eq!(
            TwistedComplex::make(3, vec![v(3, &[]), v(3, &[1, 2])], &[(1, 0)]),
            Err(TcError::NotOneSided(1, 0))
        );
        // Entries without a hom class are rejected.
        assert_eq!(
            TwistedComplex::make(3, vec![v(3, &[1]), v(3, &[2])], &[(0, 1)]),
            Err(TcError::IllegalEntry(0, 1))
        );
    }

    #[test]
    fn hom_complex_of_cone_endomorphisms() {
        let c = cone_theta1();
        let hom = HomComplex::new(&c, &c);
        assert_eq!(hom.basis, vec![(0, 0), (0, 1), (1, 1)]);
        // d sends both identities to the arrow entry and kills the arrow.
        let d = &hom.differential;
        let arrow = 1; // index of (0,1)
        let e00 = 0;
        let e11 = 2;
        assert!(d.get(arrow, e00));
        assert!(d.get(arrow, e11));
        for r in 0..3 {
            assert!(!d.get(r, arrow));
        }
        assert_eq!(homology_dim(&c, &c), 1);
    }

    #[test]
    fn homology_dims() {
        let single = TwistedComplex::single(v(3, &[]));
        assert_eq!(homology_dim(&single, &single), 1);
        // Empty hom space between incomparable vertices.
        let a = TwistedComplex::single(v(4, &[]));
        let b = TwistedComplex::single(v(4, &[1, 2, 3]));
        assert_eq!(homology_dim(&a, &b), 0);
    }

    #[test]
    fn d_squared_is_zero_on_hom_complexes() {
        for n in 3..=5 {
            let complexes = sample_complexes(n);
            for x in &complexes {
                for y in &complexes {
                    let hom = HomComplex::new(x, y);
                    let d2 = hom.differential.mul_matrix(&hom.differential);
                    assert_eq!(d2, BitMatrix::zeros(hom.dim(), hom.dim()));
                }
            }
        }
    }

    #[test]
    fn cone_examples() {
        // cone(identity) is the two-object complex with the identity entry.
        let x = TwistedComplex::single(v(3, &[1]));
        let c = cone(&TcMorphism::identity(&x)).unwrap();
        assert_eq!(c.len(), 2);
        assert!(c.entry(0, 1));
        assert!(is_contractible(&c));

        // cone of the zero map is the direct sum.
        let y = TwistedComplex::single(v(3, &[2]));
        let z = cone(&TcMorphism::zero(x.clone(), y.clone()).unwrap()).unwrap();
        assert_eq!(z, x.direct_sum(&y).unwrap());

        // cone of the quiver arrow.
        let a = TwistedComplex::single(v(3, &[]));
        let b = TwistedComplex::single(v(3, &[1, 2]));
        let f = TcMorphism::new(a, b, &[(0, 0)]).unwrap();
        assert_eq!(cone(&f).unwrap(), cone_theta1());
    }

    #[test]
    fn contractibility() {
        assert!(!is_contractible(&TwistedComplex::single(v(3, &[]))));
        assert!(!is_contractible(&cone_theta1()));
        let x = TwistedComplex::single(v(3, &[1]));
        assert!(is_contractible(&cone(&TcMorphism::identity(&x)).unwrap()));
        assert!(is_contractible(&TwistedComplex::zero(3)));
    }

    #[test]
    fn contractibility_respects_direct_sums() {
        let contractible = cone(&TcMorphism::identity(&TwistedComplex::single(v(3, &[])))).unwrap();
        let not = TwistedComplex::single(v(3, &[1]));
        assert!(is_contractible(
            &contractible.direct_sum(&contractible).unwrap()
        ));
        assert!(!is_contractible(&contractible.direct_sum(&not).unwrap()));
        assert!(!is_contractible(&not.direct_sum(&not).unwrap()));
    }

    #[test]
    fn homotopy_equivalences() {
        let x = cone_theta1();
        assert!(is_homotopy_equivalence(&TcMorphism::identity(&x)).unwrap());
        let a = TwistedComplex::single(v(3, &[]));
        let zero = TcMorphism::zero(a.clone(), x.clone()).unwrap();
        assert!(!is_homotopy_equivalence(&zero).unwrap());
        // The inclusion of the target vertex into the cone is not an
        // equivalence.
        let b = TwistedComplex::single(v(3, &[1, 2]));
        let incl = TcMorphism::new(b, x.clone(), &[(0, 1)]).unwrap();
        assert!(incl.is_closed());
        assert!(!is_homotopy_equivalence(&incl).unwrap());
    }

    /// The canonical triangle on a closed morphism: x -> y -> cone(f) -> x.
    fn canonical_triangle(
        f: &TcMorphism,
    ) -> (TcMorphism, TcMorphism) {
        let c = cone(f).unwrap();
        let x = &f.source;
        let y = &f.target;
        let incl: Vec<(usize, usize)> = (0..y.len()).map(|i| (i, x.len() + i)).collect();
        let g = TcMorphism::new(y.clone(), c.clone(), &incl).unwrap();
        let proj: Vec<(usize, usize)> = (0..x.len()).map(|i| (i, i)).collect();
        let h = TcMorphism::new(c, x.clone(), &proj).unwrap();
        (g, h)
    }

    #[test]
    fn canonical_cone_triangles_are_distinguished() {
        let a = TwistedComplex::single(v(3, &[]));
        let b = TwistedComplex::single(v(3, &[1, 2]));
        let f = TcMorphism::new(a, b, &[(0, 0)]).unwrap();
        let (g, h) = canonical_triangle(&f);
        assert!(is_distinguished(&f, &g, &h).unwrap());
    }

    #[test]
    fn direct_sum_triangles_with_nonzero_map_are_not_distinguished() {
        let x = TwistedComplex::single(v(3, &[]));
        let y = TwistedComplex::single(v(3, &[1, 2]));
        let f = TcMorphism::new(x.clone(), y.clone(), &[(0, 0)]).unwrap();
        let s = x.direct_sum(&y).unwrap();
        let g = TcMorphism::new(y.clone(), s.clone(), &[(0, 1)]).unwrap();
        let h = TcMorphism::new(s, x.clone(), &[(0, 0)]).unwrap();
        assert!(!is_distinguished(&f, &g, &h).unwrap());
    }

    #[test]
    fn distinguished_triangles_rotate() {
        // For the canonical triangle on f, the rotation (y, cone f, x) with
        // maps (g, h, f) is distinguished as well.
        let a = TwistedComplex::single(v(4, &[]));
        let b = TwistedComplex::single(v(4, &[2, 3]));
        let f = TcMorphism::new(a, b, &[(0, 0)]).unwrap();
        let (g, h) = canonical_triangle(&f);
        assert!(is_distinguished(&f, &g, &h).unwrap());
        assert!(is_distinguished(&g, &h, &f).unwrap());
        assert!(is_distinguished(&h, &f, &g).unwrap());
    }

    #[test]
    fn gaussian_elimination() {
        // cone(identity) reduces to the zero complex.
        let x = TwistedComplex::single(v(3, &[1]));
        let c = cone(&TcMorphism::identity(&x)).unwrap();
        assert!(gaussian_eliminate(&c).is_empty());

        // A complex without identity entries is unchanged.
        let c = cone_theta1();
        assert_eq!(gaussian_eliminate(&c), c);

        // cone(identity of cone_theta1) has two identity blocks and an
        // induced square; it reduces to the zero complex.
        let big = cone(&TcMorphism::identity(&cone_theta1())).unwrap();
        assert_eq!(big.len(), 4);
        let reduced = gaussian_eliminate(&big);
        assert!(reduced.is_empty(), "got {reduced:?}");
    }

    #[test]
    fn gaussian_elimination_with_induced_entries() {
        // [e{}, e{}, e{12}, e{12}] with the square (0,1)=id, (0,2)=t,
        // (1,3)=t, (2,3)=id; cancelling produces an induced entry which must
        // cancel against nothing and leave the zero complex after both
        // identity pairs collapse.
        let c = TwistedComplex::make(
            3,
            vec![v(3, &[]), v(3, &[]), v(3, &[1, 2]), v(3, &[1, 2])],
            &[(0, 1), (0, 2), (1, 3), (2, 3)],
        )
        .unwrap();
        let reduced = gaussian_eliminate(&c);
        assert!(reduced.is_empty(), "got {reduced:?}");
    }

    #[test]
    fn gaussian_elimination_preserves_homology_dims() {
        let probes = [
            TwistedComplex::single(v(3, &[])),
            TwistedComplex::single(v(3, &[1])),
            TwistedComplex::single(v(3, &[2])),
            TwistedComplex::single(v(3, &[1, 2])),
        ];
        for c in sample_complexes(3) {
            let r = gaussian_eliminate(&c);
            for probe in &probes {
                assert_eq!(homology_dim(probe, &c), homology_dim(probe, &r));
                assert_eq!(homology_dim(&c, probe), homology_dim(&r, probe));
            }
        }
    }

    /// A deterministic bag of valid complexes used by several tests,
    /// including ones with identity entries.
    fn sample_complexes(n: usize) -> Vec<TwistedComplex> {
        let mut out = vec![
            TwistedComplex::zero(n),
            TwistedComplex::single(v(n, &[])),
            TwistedComplex::single(v(n, &[1])),
        ];
        if n >= 3 {
            out.push(TwistedComplex::make(n, vec![v(n, &[]), v(n, &[1, 2])], &[(0, 1)]).unwrap());
            out.push(
                TwistedComplex::make(n, vec![v(n, &[]), v(n, &[1, 2])], &[]).unwrap(),
            );
            let c = out.last().unwrap().clone();
            out.push(cone(&TcMorphism::identity(&c)).unwrap());
            out.push(
                TwistedComplex::make(
                    n,
                    vec![v(n, &[]), v(n, &[]), v(n, &[1, 2]), v(n, &[1, 2])],
                    &[(0, 1), (0, 2), (1, 3), (2, 3)],
                )
                .unwrap(),
            );
        }
        if n >= 4 {
            out.push(
                TwistedComplex::make(
                    n,
                    vec![v(n, &[]), v(n, &[1, 2]), v(n, &[2, 3])],
                    &[(0, 1), (0, 2)],
                )
                .unwrap(),
            );
        }
        out
    }

    #[test]
    fn json_round_trip() {
        for c in sample_complexes(4) {
            let s = c.to_json().to_string();
            let back = TwistedComplex::from_json_str(&s).unwrap();
            assert_eq!(back, c);
        }
        // Violations are rejected at parse time.
        let bad = r#"{"n":3,"objects":[[],[1,2],[1,2]],"p":[{"i":0,"j":1},{"i":1,"j":2}]}"#;
        assert!(TwistedComplex::from_json_str(bad).is_err());
    }
}
