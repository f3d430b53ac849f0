//! Dividing sets on the marked disk as non-crossing perfect matchings.
//!
//! Boundary convention used everywhere in this crate: the disk carries `2n`
//! marked points labelled `1..2n` counterclockwise, and the basepoint sits in
//! the boundary gap between point `2n` and point `1`. Internally points are
//! `0`-based; all constructors, JSON and display use the `1`-based labels.
//!
//! A dividing set is a non-crossing matching plus a count of closed circle
//! components and the sign of the region containing the basepoint. Circles
//! carry no position data: one circle already collapses the object to zero,
//! so only the count is stored.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DiskError {
    #[error("dividing set contains circles and is the zero object")]
    ZeroObject,
    #[error("pairing is not a fixed-point-free involution on 1..{0}")]
    NotInvolution(usize),
    #[error("pairing has crossing chords {0:?} and {1:?}")]
    Crossing((usize, usize), (usize, usize)),
    #[error("operands live on different disks: n = {0} vs n = {1}")]
    SizeMismatch(usize, usize),
    #[error("generator index {0} out of range 1..{1}")]
    BadGenerator(usize, usize),
    #[error("invalid dividing set encoding: {0}")]
    BadEncoding(String),
}

/// Sign of the region containing the basepoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_int(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// An isotopy class of dividing sets on the disk with `2n` marked points.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DividingSet {
    n: usize,
    /// Fixed-point-free involution on `0..2n`, non-crossing.
    pairing: Vec<usize>,
    circles: usize,
    sign: Sign,
}

impl DividingSet {
    /// Builds a dividing set from 1-based endpoint pairs.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)], sign: Sign) -> Result<Self, DiskError> {
        let mut pairing = vec![usize::MAX; 2 * n];
        if pairs.len() != n {
            return Err(DiskError::NotInvolution(2 * n));
        }
        for &(a, b) in pairs {
            if a == b || a == 0 || b == 0 || a > 2 * n || b > 2 * n {
                return Err(DiskError::NotInvolution(2 * n));
            }
            let (a, b) = (a - 1, b - 1);
            if pairing[a] != usize::MAX || pairing[b] != usize::MAX {
                return Err(DiskError::NotInvolution(2 * n));
            }
            pairing[a] = b;
            pairing[b] = a;
        }
        Self::from_involution(n, pairing, 0, sign)
    }

    pub fn from_involution(
        n: usize,
        pairing: Vec<usize>,
        circles: usize,
        sign: Sign,
    ) -> Result<Self, DiskError> {
        if pairing.len() != 2 * n {
            return Err(DiskError::NotInvolution(2 * n));
        }
        for (i, &j) in pairing.iter().enumerate() {
            if j >= 2 * n || j == i || pairing[j] != i {
                return Err(DiskError::NotInvolution(2 * n));
            }
        }
        // Non-crossing: no i < k < j < l with (i,j) and (k,l) both chords.
        for i in 0..2 * n {
            let j = pairing[i];
            if j < i {
                continue;
            }
            for k in i + 1..j {
                let l = pairing[k];
                if l < i || l > j {
                    return Err(DiskError::Crossing((i + 1, j + 1), (k + 1, l + 1)));
                }
            }
        }
        Ok(Self {
            n,
            pairing,
            circles,
            sign,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn circles(&self) -> usize {
        self.circles
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn with_circles(&self, circles: usize) -> Self {
        let mut d = self.clone();
        d.circles = circles;
        d
    }

    /// Partner of a 0-based point.
    pub fn partner(&self, i: usize) -> usize {
        self.pairing[i]
    }

    /// Chords as 1-based pairs `(a, b)` with `a < b`, sorted by `a`.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.n);
        for i in 0..2 * self.n {
            let j = self.pairing[i];
            if i < j {
                out.push((i + 1, j + 1));
            }
        }
        out
    }

    /// 0-based chords `(a, b)` with `a < b`, sorted.
    pub fn chords(&self) -> Vec<Chord> {
        let mut out = Vec::with_capacity(self.n);
        for i in 0..2 * self.n {
            let j = self.pairing[i];
            if i < j {
                out.push(Chord(i, j));
            }
        }
        out
    }

    /// All circle-free non-crossing matchings on `2n` points with positive
    /// basepoint sign, in lexicographic order of the pairing vector. The
    /// count is the `n`-th Catalan number.
    pub fn enumerate(n: usize) -> Vec<DividingSet> {
        assert!(n >= 1, "need n >= 1");
        let mut out = Vec::new();
        let mut pairing = vec![usize::MAX; 2 * n];
        fn rec(pairing: &mut Vec<usize>, out: &mut Vec<DividingSet>, n: usize) {
            let Some(i) = pairing.iter().position(|&x| x == usize::MAX) else {
                out.push(DividingSet {
                    n,
                    pairing: pairing.clone(),
                    circles: 0,
                    sign: Sign::Plus,
                });
                return;
            };
            // The partner of the first free point must enclose only free
            // points (otherwise it would cross an earlier chord), evenly
            // many so they can pair among themselves.
            for j in i + 1..2 * n {
                if pairing[j] != usize::MAX {
                    continue;
                }
                if (j - i - 1) % 2 != 0
                    || (i + 1..j).any(|k| pairing[k] != usize::MAX)
                {
                    continue;
                }
                pairing[i] = j;
                pairing[j] = i;
                rec(pairing, out, n);
                pairing[i] = usize::MAX;
                pairing[j] = usize::MAX;
            }
        }
        rec(&mut pairing, &mut out, n);
        out
    }

    /// Flips the signs of all regions; the pairing is unchanged.
    pub fn dual(&self) -> Self {
        let mut d = self.clone();
        d.sign = d.sign.flip();
        d
    }

    /// Orientation reversal of the disk fixing the basepoint: relabels
    /// `i -> 2n + 1 - i`.
    pub fn mirror(&self) -> Self {
        let m = 2 * self.n;
        let mut pairing = vec![usize::MAX; m];
        for i in 0..m {
            pairing[m - 1 - i] = m - 1 - self.pairing[i];
        }
        Self {
            n: self.n,
            pairing,
            circles: self.circles,
            sign: self.sign,
        }
    }

    /// Moves the basepoint over the nearest marked point: relabels
    /// `i -> i - 1` cyclically. Every marked point ends a chord, so the
    /// basepoint region changes to the adjacent one and the sign flips.
    pub fn rotate(&self) -> Self {
        let m = 2 * self.n;
        let mut pairing = vec![usize::MAX; m];
        for i in 0..m {
            pairing[(i + m - 1) % m] = (self.pairing[i] + m - 1) % m;
        }
        Self {
            n: self.n,
            pairing,
            circles: self.circles,
            sign: self.sign.flip(),
        }
    }

    /// Zero-object normalization: a dividing set containing a circle is
    /// contractible, so it normalizes to `None`.
    pub fn normalize(&self) -> Option<&Self> {
        if self.circles > 0 {
            None
        } else {
            Some(self)
        }
    }

    /// Face decomposition of the disk cut along the chords.
    pub fn faces(&self) -> Result<FaceTree, DiskError> {
        if self.circles > 0 {
            return Err(DiskError::ZeroObject);
        }
        Ok(FaceTree::build(self))
    }

    /// Euler number: positive faces minus negative faces. Every face of a
    /// disk cut along chords is itself a disk, so each contributes 1 to the
    /// Euler characteristic of its region.
    pub fn euler_number(&self) -> Result<i64, DiskError> {
        let tree = self.faces()?;
        Ok(tree
            .faces
            .iter()
            .map(|f| f.sign.as_int())
            .sum())
    }
}

impl fmt::Debug for DividingSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DividingSet(n={}, {:?}", self.n, self.pairs())?;
        if self.circles > 0 {
            write!(f, ", circles={}", self.circles)?;
        }
        write!(f, ", {})", self.sign)
    }
}

/// A chord with 0-based endpoints, normalized so `0 <= a < b < 2n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chord(pub usize, pub usize);

impl Chord {
    pub fn new(a: usize, b: usize) -> Self {
        if a < b {
            Chord(a, b)
        } else {
            Chord(b, a)
        }
    }

    /// 1-based endpoint pair.
    pub fn labels(&self) -> (usize, usize) {
        (self.0 + 1, self.1 + 1)
    }
}

impl fmt::Debug for Chord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0 + 1, self.1 + 1)
    }
}

/// One complementary region of the disk cut along the chords.
#[derive(Debug, Clone)]
pub struct Face {
    /// Boundary gaps belonging to this face. Gap `g` is the arc between
    /// marked point `g` and `g+1` (1-based labels); gap `0` holds the
    /// basepoint.
    pub gaps: Vec<usize>,
    /// Chords on the face boundary, directed as traversed (0-based
    /// tail, head).
    pub directed_chords: Vec<(usize, usize)>,
    pub sign: Sign,
}

/// The dual tree of the face decomposition: one node per face, one edge per
/// chord, signs alternating across every chord.
#[derive(Debug, Clone)]
pub struct FaceTree {
    pub faces: Vec<Face>,
    /// Edges `(face, face, chord)` with the smaller face id first.
    pub edges: Vec<(usize, usize, Chord)>,
    /// Face containing the basepoint gap; always face 0.
    pub basepoint_face: usize,
}

impl FaceTree {
    fn build(d: &DividingSet) -> FaceTree {
        let m = 2 * d.n;
        let mut gap_face = vec![usize::MAX; m];
        let mut faces: Vec<Face> = Vec::new();

        // Walk each face boundary: after gap g comes the chord leaving the
        // 0-based point g, traversed (g, partner(g)); after a chord arriving
        // at point y comes gap (y + 1) mod 2n.
        for start in 0..m {
            if gap_face[start] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut gaps = Vec::new();
            let mut directed_chords = Vec::new();
            let mut g = start;
            loop {
                gap_face[g] = id;
                gaps.push(g);
                let tail = g;
                let head = d.pairing[tail];
                directed_chords.push((tail, head));
                g = (head + 1) % m;
                if g == start {
                    break;
                }
            }
            faces.push(Face {
                gaps,
                directed_chords,
                sign: Sign::Plus, // fixed below
            });
        }

        // Each chord separates two faces.
        let mut edges = Vec::new();
        for chord in d.chords() {
            let fa = gap_face[(chord.1 + 1) % m];
            let fb = gap_face[(chord.0 + 1) % m];
            debug_assert_ne!(fa, fb, "chord must separate distinct faces");
            edges.push((fa.min(fb), fa.max(fb), chord));
        }
        edges.sort();

        // Signs alternate across chords, seeded at the basepoint face.
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); faces.len()];
        for (i, &(a, b, _)) in edges.iter().enumerate() {
            adj[a].push(i);
            adj[b].push(i);
        }
        let mut depth = vec![usize::MAX; faces.len()];
        let mut stack = vec![0usize];
        depth[0] = 0;
        while let Some(f) = stack.pop() {
            for &e in &adj[f] {
                let (a, b, _) = edges[e];
                let other = if a == f { b } else { a };
                if depth[other] == usize::MAX {
                    depth[other] = depth[f] + 1;
                    stack.push(other);
                }
            }
        }
        for (f, face) in faces.iter_mut().enumerate() {
            debug_assert_ne!(depth[f], usize::MAX, "face tree must be connected");
            face.sign = if depth[f] % 2 == 0 { d.sign } else { d.sign.flip() };
        }

        FaceTree {
            faces,
            edges,
            basepoint_face: 0,
        }
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// Neighbors of a face as `(other_face, chord)` pairs.
    pub fn neighbors(&self, f: usize) -> Vec<(usize, Chord)> {
        let mut out = Vec::new();
        for &(a, b, c) in &self.edges {
            if a == f {
                out.push((b, c));
            } else if b == f {
                out.push((a, c));
            }
        }
        out
    }

    /// Face on each side of a chord.
    pub fn faces_of_chord(&self, c: Chord) -> Option<(usize, usize)> {
        self.edges
            .iter()
            .find(|&&(_, _, e)| e == c)
            .map(|&(a, b, _)| (a, b))
    }

    /// Direction `(tail, head)` in which `face` traverses `chord`.
    pub fn traversal(&self, face: usize, chord: Chord) -> Option<(usize, usize)> {
        self.faces[face]
            .directed_chords
            .iter()
            .copied()
            .find(|&(t, h)| Chord::new(t, h) == chord)
    }

    /// Face containing a given gap.
    pub fn face_of_gap(&self, gap: usize) -> usize {
        self.faces
            .iter()
            .position(|f| f.gaps.contains(&gap))
            .expect("gap out of range")
    }

    /// Tree distance between two faces.
    pub fn distance(&self, a: usize, b: usize) -> usize {
        self.path(a, b).len()
    }

    /// The unique simple path from `a` to `b` as a list of crossed chords.
    pub fn path(&self, a: usize, b: usize) -> Vec<Chord> {
        if a == b {
            return Vec::new();
        }
        let mut prev: Vec<Option<(usize, Chord)>> = vec![None; self.faces.len()];
        let mut queue = std::collections::VecDeque::from([a]);
        let mut seen = vec![false; self.faces.len()];
        seen[a] = true;
        while let Some(f) = queue.pop_front() {
            if f == b {
                break;
            }
            for (g, c) in self.neighbors(f) {
                if !seen[g] {
                    seen[g] = true;
                    prev[g] = Some((f, c));
                    queue.push_back(g);
                }
            }
        }
        let mut path = Vec::new();
        let mut cur = b;
        while cur != a {
            let (p, c) = prev[cur].expect("tree is connected");
            path.push(c);
            cur = p;
        }
        path.reverse();
        path
    }

    /// Graphviz rendering of the dual tree.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph faces {\n");
        for (i, f) in self.faces.iter().enumerate() {
            let gaps: Vec<String> = f.gaps.iter().map(|g| format!("g{g}")).collect();
            s.push_str(&format!(
                "  f{i} [label=\"f{i} {} [{}]\"];\n",
                f.sign,
                gaps.join(",")
            ));
        }
        for &(a, b, c) in &self.edges {
            let (x, y) = c.labels();
            s.push_str(&format!("  f{a} -- f{b} [label=\"({x},{y})\"];\n"));
        }
        s.push_str("}\n");
        s
    }
}

// ---------------------------------------------------------------------------
// JSON encoding
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct DividingSetJson {
    n: usize,
    pairs: Vec<(usize, usize)>,
    circles: usize,
    sign: String,
}

impl DividingSet {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(DividingSetJson {
            n: self.n,
            pairs: self.pairs(),
            circles: self.circles,
            sign: self.sign.to_string(),
        })
        .expect("serialization cannot fail")
    }

    pub fn from_json_str(s: &str) -> Result<Self, DiskError> {
        let raw: DividingSetJson =
            serde_json::from_str(s).map_err(|e| DiskError::BadEncoding(e.to_string()))?;
        let sign = match raw.sign.as_str() {
            "+" => Sign::Plus,
            "-" => Sign::Minus,
            other => return Err(DiskError::BadEncoding(format!("bad sign {other:?}"))),
        };
        if raw.n == 0 || raw.n > 64 {
            return Err(DiskError::BadEncoding(format!("unsupported n = {}", raw.n)));
        }
        let mut d = Self::from_pairs(raw.n, &raw.pairs, sign)?;
        d.circles = raw.circles;
        Ok(d)
    }
}

// ---------------------------------------------------------------------------
// Nil-Temperley-Lieb diagram calculus
// ---------------------------------------------------------------------------

/// A planar diagram in the Temperley-Lieb sense: a perfect matching on the
/// `n` left endpoints and `n` right endpoints of a strip. No loop component
/// survives multiplication because loops evaluate to zero here.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
struct TlDiagram {
    n: usize,
    /// Matching on `0..2n` where `0..n` are left endpoints `l_1..l_n` and
    /// `n..2n` are right endpoints `r_1..r_n`.
    link: Vec<usize>,
}

impl TlDiagram {
    fn identity(n: usize) -> Self {
        let mut link = vec![0; 2 * n];
        for i in 0..n {
            link[i] = n + i;
            link[n + i] = i;
        }
        TlDiagram { n, link }
    }

    fn generator(n: usize, i: usize) -> Self {
        debug_assert!((1..n).contains(&i));
        let mut d = Self::identity(n);
        let (a, b) = (i - 1, i);
        d.link[a] = b;
        d.link[b] = a;
        d.link[n + a] = n + b;
        d.link[n + b] = n + a;
        d
    }

    /// Stacks `self` then `other`, gluing the right side of `self` to the
    /// left side of `other`. Returns `None` when a closed loop forms.
    fn compose(&self, other: &Self) -> Option<Self> {
        let n = self.n;
        debug_assert_eq!(n, other.n);
        let mut link = vec![usize::MAX; 2 * n];
        let mut seen_glue = vec![false; n];
        // Walk through the two diagrams, crossing the glue layer, until an
        // outer endpoint is reached. `(in_first, node)` addresses a point of
        // one diagram; glue identifies first's `n + i` with second's `i`.
        let trace = |in_first: bool, start: usize, seen_glue: &mut Vec<bool>| -> usize {
            let mut in_first = in_first;
            let mut node = start;
            loop {
                if in_first {
                    let t = self.link[node];
                    if t < n {
                        return t; // outer left endpoint
                    }
                    seen_glue[t - n] = true;
                    node = t - n;
                    in_first = false;
                } else {
                    let t = other.link[node];
                    if t >= n {
                        return n + (t - n); // outer right endpoint
                    }
                    seen_glue[t] = true;
                    node = n + t;
                    in_first = true;
                }
            }
        };
        for i in 0..n {
            if link[i] == usize::MAX {
                let t = trace(true, i, &mut seen_glue);
                link[i] = t;
                link[t] = i;
            }
        }
        for i in 0..n {
            if link[n + i] == usize::MAX {
                let t = trace(false, n + i, &mut seen_glue);
                link[n + i] = t;
                link[t] = n + i;
            }
        }
        // Every glue point lies on either a traced boundary strand or a
        // closed loop; traces marked all of the former.
        if seen_glue.iter().any(|&s| !s) {
            return None;
        }
        Some(TlDiagram { n, link })
    }

    /// The non-crossing matching on the disk: left endpoints `l_j` map to
    /// labels `j`, right endpoints `r_j` to labels `2n + 1 - j`.
    fn to_matching(&self, sign: Sign) -> DividingSet {
        let n = self.n;
        let m = 2 * n;
        let to_disk = |node: usize| -> usize {
            if node < n {
                node // l_{j} -> point j (0-based)
            } else {
                m - 1 - (node - n) // r_{j} -> point 2n+1-j (0-based: 2n-j)
            }
        };
        let mut pairing = vec![usize::MAX; m];
        for a in 0..m {
            let b = self.link[a];
            pairing[to_disk(a)] = to_disk(b);
        }
        DividingSet::from_involution(n, pairing, 0, sign)
            .expect("planar composition stays non-crossing")
    }
}

/// A monomial in the nil-Temperley-Lieb algebra, kept in canonical
/// (shortlex-least) form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NilTlMonomial {
    n: usize,
    word: Vec<usize>,
}

/// A nil-Temperley-Lieb algebra element that is either zero or a monomial;
/// products of monomials never leave this set.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum NilTl {
    Zero(usize),
    Monomial(NilTlMonomial),
}

impl fmt::Debug for NilTlMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "1(n={})", self.n);
        }
        let w: Vec<String> = self.word.iter().map(|i| format!("e{i}")).collect();
        write!(f, "{}(n={})", w.join("·"), self.n)
    }
}

impl NilTlMonomial {
    pub fn identity(n: usize) -> Self {
        NilTlMonomial { n, word: vec![] }
    }

    pub fn generator(n: usize, i: usize) -> Result<Self, DiskError> {
        if i == 0 || i >= n {
            return Err(DiskError::BadGenerator(i, n));
        }
        Ok(NilTlMonomial { n, word: vec![i] })
    }

    /// Builds the canonical monomial for a word, or zero.
    pub fn from_word(n: usize, word: &[usize]) -> Result<NilTl, DiskError> {
        let mut acc = NilTl::Monomial(Self::identity(n));
        for &i in word {
            let gen = NilTl::Monomial(Self::generator(n, i)?);
            acc = multiply(&acc, &gen)?;
        }
        Ok(acc)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    fn diagram(&self) -> TlDiagram {
        let mut d = TlDiagram::identity(self.n);
        for &i in &self.word {
            d = d
                .compose(&TlDiagram::generator(self.n, i))
                .expect("canonical words are loop-free");
        }
        d
    }
}

/// Canonical-word tables per strand count, built lazily by breadth-first
/// search over products with the generators.
fn word_table(n: usize) -> &'static HashMap<Vec<usize>, Vec<usize>> {
    static TABLES: OnceLock<Mutex<HashMap<usize, &'static HashMap<Vec<usize>, Vec<usize>>>>> =
        OnceLock::new();
    let tables = TABLES.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = tables.lock().expect("table lock");
    if let Some(t) = guard.get(&n) {
        return t;
    }
    let mut table: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
    let id = TlDiagram::identity(n);
    table.insert(id.link.clone(), vec![]);
    let mut layer: BTreeMap<Vec<usize>, TlDiagram> = BTreeMap::new();
    layer.insert(vec![], id);
    while !layer.is_empty() {
        let mut next: BTreeMap<Vec<usize>, TlDiagram> = BTreeMap::new();
        for (word, diag) in &layer {
            for i in 1..n {
                if let Some(product) = diag.compose(&TlDiagram::generator(n, i)) {
                    if !table.contains_key(&product.link) {
                        let mut w = word.clone();
                        w.push(i);
                        table.insert(product.link.clone(), w.clone());
                        next.insert(w, product);
                    }
                }
            }
        }
        layer = next;
    }
    let leaked: &'static HashMap<_, _> = Box::leak(Box::new(table));
    guard.insert(n, leaked);
    leaked
}

/// Product in the nil-Temperley-Lieb algebra: stack the strip diagrams and
/// collapse to the canonical word; a closed loop kills the product.
pub fn multiply(a: &NilTl, b: &NilTl) -> Result<NilTl, DiskError> {
    let (na, nb) = (nil_n(a), nil_n(b));
    if na != nb {
        return Err(DiskError::SizeMismatch(na, nb));
    }
    match (a, b) {
        (NilTl::Zero(_), _) | (_, NilTl::Zero(_)) => Ok(NilTl::Zero(na)),
        (NilTl::Monomial(x), NilTl::Monomial(y)) => {
            match x.diagram().compose(&y.diagram()) {
                None => Ok(NilTl::Zero(na)),
                Some(d) => {
                    let word = word_table(na)
                        .get(&d.link)
                        .expect("every loop-free diagram is a product of generators")
                        .clone();
                    Ok(NilTl::Monomial(NilTlMonomial { n: na, word }))
                }
            }
        }
    }
}

fn nil_n(x: &NilTl) -> usize {
    match x {
        NilTl::Zero(n) => *n,
        NilTl::Monomial(m) => m.n,
    }
}

/// The multicurve of a nil-Temperley-Lieb element: monomials give circle-free
/// matchings with positive basepoint sign, zero gives a circle representative.
pub fn gamma(x: &NilTl) -> DividingSet {
    match x {
        NilTl::Zero(n) => {
            let id = NilTlMonomial::identity(*n).diagram().to_matching(Sign::Plus);
            id.with_circles(1)
        }
        NilTl::Monomial(m) => m.diagram().to_matching(Sign::Plus),
    }
}

/// Convenience wrapper: `gamma` of the canonical monomial of `word`.
pub fn gamma_of_word(n: usize, word: &[usize]) -> Result<DividingSet, DiskError> {
    Ok(gamma(&NilTlMonomial::from_word(n, word)?))
}

/// The ordered monomial `e_S` for a subset of `{1..n-1}` (increasing word).
pub fn ordered_monomial(n: usize, subset: &[usize]) -> Result<NilTlMonomial, DiskError> {
    let mut word: Vec<usize> = subset.to_vec();
    word.sort_unstable();
    word.dedup();
    for &i in &word {
        if i == 0 || i >= n {
            return Err(DiskError::BadGenerator(i, n));
        }
    }
    match NilTlMonomial::from_word(n, &word)? {
        NilTl::Monomial(m) => Ok(m),
        NilTl::Zero(_) => unreachable!("increasing words are reduced"),
    }
}

/// Canonical (shortlex-least) reduced word of a circle-free matching.
pub fn canonical_word(d: &DividingSet) -> Vec<usize> {
    let n = d.n();
    // Convert disk labels back to strip endpoints and look the diagram up.
    let from_disk = |p: usize| -> usize {
        if p < n {
            p
        } else {
            n + (2 * n - 1 - p)
        }
    };
    let mut link = vec![usize::MAX; 2 * n];
    for a in 0..2 * n {
        link[from_disk(a)] = from_disk(d.partner(a));
    }
    word_table(n)
        .get(&link)
        .expect("every circle-free matching is a monomial multicurve")
        .clone()
}
