use crate::error::{Error, Result};
use crate::subset::{subsets_by_cardinality, Subset, MAX_UNIVERSE};
use std::collections::BTreeSet;

/// Default ground-size bound for circuit enumeration (a full subset scan).
pub const DEFAULT_CIRCUIT_SCAN_N: usize = 20;

#[derive(Clone, Debug)]
enum Repr {
    Uniform {
        rank: usize,
    },
    Graphic {
        vertices: usize,
        edges: Vec<(usize, usize)>,
    },
    Bases {
        bases: Vec<Subset>,
    },
    Circuits {
        circuits: Vec<Subset>,
    },
    Deletion {
        inner: Box<Matroid>,
        element: usize,
    },
    Contraction {
        inner: Box<Matroid>,
        element: usize,
    },
    DirectSum {
        left: Box<Matroid>,
        right: Box<Matroid>,
    },
}

/// A matroid on ground set `{0,..,n-1}` with exact rank and independence
/// queries. Values are immutable; queries are pure and safe to share
/// across threads.
#[derive(Clone, Debug)]
pub struct Matroid {
    ground: usize,
    repr: Repr,
}

/// The minimal dependent sets of a matroid, ordered by cardinality then
/// lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircuitList {
    circuits: Vec<Subset>,
}

impl CircuitList {
    pub fn circuits(&self) -> &[Subset] {
        &self.circuits
    }

    pub fn len(&self) -> usize {
        self.circuits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.circuits.is_empty()
    }
}

impl Matroid {
    /// Uniform matroid `U_{r,n}`: independent sets are all subsets of size <= r.
    pub fn uniform(rank: usize, ground: usize) -> Matroid {
        assert!(ground <= MAX_UNIVERSE, "ground set exceeds {MAX_UNIVERSE}");
        assert!(rank <= ground, "uniform rank {rank} exceeds ground size {ground}");
        Matroid {
            ground,
            repr: Repr::Uniform { rank },
        }
    }

    /// Free matroid: every subset independent.
    pub fn free(ground: usize) -> Matroid {
        Matroid::uniform(ground, ground)
    }

    /// Graphic matroid of an edge list; element `i` is edge `i`, and a set
    /// of edges is independent iff it is a forest. Self-loops become
    /// matroid loops, parallel edges become 2-element circuits.
    pub fn graphic(vertices: usize, edges: Vec<(usize, usize)>) -> Matroid {
        assert!(edges.len() <= MAX_UNIVERSE, "edge count exceeds {MAX_UNIVERSE}");
        for &(a, b) in &edges {
            assert!(a < vertices && b < vertices, "edge ({a},{b}) outside vertex range");
        }
        Matroid {
            ground: edges.len(),
            repr: Repr::Graphic { vertices, edges },
        }
    }

    /// Graphic matroid of the cycle `C_n`: edge `i` joins vertices `i` and
    /// `(i+1) mod n`.
    pub fn cycle(n: usize) -> Matroid {
        assert!(n >= 1);
        let edges = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Matroid::graphic(n, edges)
    }

    /// Graphic matroid of the complete graph `K_v`, edges in lexicographic
    /// order `(0,1), (0,2), ..`.
    pub fn complete_graph(v: usize) -> Matroid {
        let mut edges = Vec::new();
        for a in 0..v {
            for b in (a + 1)..v {
                edges.push((a, b));
            }
        }
        Matroid::graphic(v, edges)
    }

    /// Matroid given by an explicit basis family, validated against the
    /// basis exchange axiom.
    pub fn from_bases(ground: usize, bases: Vec<Subset>) -> Result<Matroid> {
        if let Some(msg) = basis_family_violation(ground, &bases) {
            return Err(Error::InvalidBases(msg));
        }
        Ok(Matroid::from_bases_unchecked(ground, bases))
    }

    /// Skips the exchange-axiom check; rank queries on a non-matroid family
    /// return garbage.
    pub fn from_bases_unchecked(ground: usize, bases: Vec<Subset>) -> Matroid {
        assert!(ground <= MAX_UNIVERSE);
        for b in &bases {
            assert_eq!(b.universe_size(), ground, "basis universe mismatch");
        }
        Matroid {
            ground,
            repr: Repr::Bases { bases },
        }
    }

    /// Matroid given by an explicit circuit family, validated for
    /// incomparability and weak elimination on pairs.
    pub fn from_circuits(ground: usize, circuits: Vec<Subset>) -> Result<Matroid> {
        if let Some(msg) = circuit_family_violation(ground, &circuits) {
            return Err(Error::InvalidCircuits(msg));
        }
        Ok(Matroid::from_circuits_unchecked(ground, circuits))
    }

    pub fn from_circuits_unchecked(ground: usize, circuits: Vec<Subset>) -> Matroid {
        assert!(ground <= MAX_UNIVERSE);
        for c in &circuits {
            assert_eq!(c.universe_size(), ground, "circuit universe mismatch");
        }
        Matroid {
            ground,
            repr: Repr::Circuits { circuits },
        }
    }

    /// Deletion minor `M \ e`, elements relabeled to `0,..,n-2` preserving
    /// relative order.
    pub fn deleted(&self, element: usize) -> Matroid {
        assert!(element < self.ground, "element {element} out of range");
        Matroid {
            ground: self.ground - 1,
            repr: Repr::Deletion {
                inner: Box::new(self.clone()),
                element,
            },
        }
    }

    /// Contraction minor `M / e`, elements relabeled as in [`Matroid::deleted`].
    pub fn contracted(&self, element: usize) -> Matroid {
        assert!(element < self.ground, "element {element} out of range");
        Matroid {
            ground: self.ground - 1,
            repr: Repr::Contraction {
                inner: Box::new(self.clone()),
                element,
            },
        }
    }

    /// Direct sum; left-hand elements keep their indices, right-hand
    /// elements are shifted up by `self.ground_size()`.
    pub fn direct_sum(&self, other: &Matroid) -> Matroid {
        assert!(
            self.ground + other.ground <= MAX_UNIVERSE,
            "direct sum exceeds {MAX_UNIVERSE} elements"
        );
        Matroid {
            ground: self.ground + other.ground,
            repr: Repr::DirectSum {
                left: Box::new(self.clone()),
                right: Box::new(other.clone()),
            },
        }
    }

    pub fn ground_size(&self) -> usize {
        self.ground
    }

    pub fn ground_set(&self) -> Subset {
        Subset::full(self.ground)
    }

    /// Matroid rank of `S`. Panics if `S` lives on a different universe.
    pub fn rank(&self, s: &Subset) -> usize {
        assert_eq!(
            s.universe_size(),
            self.ground,
            "subset universe {} does not match ground size {}",
            s.universe_size(),
            self.ground
        );
        self.rank_bits(s.bits())
    }

    fn rank_bits(&self, bits: u64) -> usize {
        match &self.repr {
            Repr::Uniform { rank } => (bits.count_ones() as usize).min(*rank),
            Repr::Graphic { vertices, edges } => {
                // Forest rank: one per union that joins two components.
                let mut dsu = Dsu::new(*vertices);
                let mut rank = 0;
                let mut rest = bits;
                while rest != 0 {
                    let e = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    let (a, b) = edges[e];
                    if dsu.union(a, b) {
                        rank += 1;
                    }
                }
                rank
            }
            Repr::Bases { bases } => bases
                .iter()
                .map(|b| (b.bits() & bits).count_ones() as usize)
                .max()
                .unwrap_or(0),
            Repr::Circuits { circuits } => {
                // Independent = circuit-free, so grow a maximal circuit-free
                // subset greedily.
                let mut kept = 0u64;
                let mut rank = 0;
                let mut rest = bits;
                while rest != 0 {
                    let e = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    let candidate = kept | 1 << e;
                    if circuits.iter().all(|c| c.bits() & candidate != c.bits()) {
                        kept = candidate;
                        rank += 1;
                    }
                }
                rank
            }
            Repr::Deletion { inner, element } => inner.rank_bits(insert_gap(bits, *element)),
            Repr::Contraction { inner, element } => {
                let e_bit = 1u64 << *element;
                inner.rank_bits(insert_gap(bits, *element) | e_bit) - inner.rank_bits(e_bit)
            }
            Repr::DirectSum { left, right } => {
                let nl = left.ground;
                let left_bits = if nl == 64 { bits } else { bits & ((1u64 << nl) - 1) };
                let right_bits = bits >> nl;
                left.rank_bits(left_bits) + right.rank_bits(right_bits)
            }
        }
    }

    pub fn is_independent(&self, s: &Subset) -> bool {
        self.rank(s) == s.len()
    }

    /// Least loop (rank-zero element), if any.
    pub fn first_loop(&self) -> Option<usize> {
        (0..self.ground).find(|&e| self.rank_bits(1 << e) == 0)
    }

    pub fn is_loopless(&self) -> bool {
        self.first_loop().is_none()
    }

    /// True iff every subset is independent.
    pub fn is_free(&self) -> bool {
        self.rank_bits(Subset::full(self.ground).bits()) == self.ground
    }

    /// All circuits, found by scanning subsets in order of increasing
    /// cardinality and keeping dependent sets that contain no kept set.
    pub fn circuits(&self) -> Result<CircuitList> {
        self.circuits_bounded(DEFAULT_CIRCUIT_SCAN_N)
    }

    pub fn circuits_bounded(&self, max_n: usize) -> Result<CircuitList> {
        if self.ground > max_n {
            return Err(Error::SizeCap {
                what: "circuit enumeration",
                limit: max_n,
                requested: self.ground,
            });
        }
        let mut kept: Vec<Subset> = Vec::new();
        for s in subsets_by_cardinality(self.ground) {
            if s.is_empty() || self.is_independent(&s) {
                continue;
            }
            if kept.iter().any(|c| c.is_subset_of(&s)) {
                continue;
            }
            kept.push(s);
        }
        Ok(CircuitList { circuits: kept })
    }
}

/// Maps a minor-relabeled mask back to the parent ground set by opening a
/// gap at the removed element's position.
fn insert_gap(bits: u64, element: usize) -> u64 {
    let low = if element == 0 { 0 } else { bits & ((1u64 << element) - 1) };
    let high_src = bits >> element;
    let high = if high_src == 0 { 0 } else { high_src << (element + 1) };
    low | high
}

/// `None` if the family is a valid basis family, else a description of the
/// first violation found: nonempty, equicardinal, and the exchange axiom.
pub fn validate_bases(ground: usize, family: &[Subset]) -> bool {
    basis_family_violation(ground, family).is_none()
}

fn basis_family_violation(ground: usize, family: &[Subset]) -> Option<String> {
    if family.is_empty() {
        return Some("family is empty".to_string());
    }
    for b in family {
        if b.universe_size() != ground {
            return Some(format!("basis {b} not on a {ground}-element ground set"));
        }
    }
    let size = family[0].len();
    if let Some(b) = family.iter().find(|b| b.len() != size) {
        return Some(format!("bases are not equicardinal: {} vs {}", family[0], b));
    }
    let members: BTreeSet<u64> = family.iter().map(|b| b.bits()).collect();
    if members.len() != family.len() {
        return Some("family lists a basis twice".to_string());
    }
    for b1 in family {
        for b2 in family {
            for x in b1.difference(b2).iter() {
                let found = b2
                    .difference(b1)
                    .iter()
                    .any(|y| members.contains(&(b1.without(x).with(y).bits())));
                if !found {
                    return Some(format!(
                        "exchange fails for {b1}, {b2} at element {x}"
                    ));
                }
            }
        }
    }
    None
}

fn circuit_family_violation(ground: usize, family: &[Subset]) -> Option<String> {
    for c in family {
        if c.universe_size() != ground {
            return Some(format!("circuit {c} not on a {ground}-element ground set"));
        }
        if c.is_empty() {
            return Some("the empty set cannot be a circuit".to_string());
        }
    }
    for (i, c1) in family.iter().enumerate() {
        for (j, c2) in family.iter().enumerate() {
            if i == j {
                continue;
            }
            if c1.is_subset_of(c2) {
                return Some(format!("circuit {c1} is contained in circuit {c2}"));
            }
        }
    }
    // Weak elimination, checked on pairs.
    for (i, c1) in family.iter().enumerate() {
        for c2 in family.iter().skip(i + 1) {
            for e in c1.intersection(c2).iter() {
                let target = c1.union(c2).without(e);
                if !family.iter().any(|c3| c3.is_subset_of(&target)) {
                    return Some(format!(
                        "weak elimination fails for {c1}, {c2} at element {e}"
                    ));
                }
            }
        }
    }
    None
}

/// Union-find over vertices, path halving + union by size.
struct Dsu {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl Dsu {
    fn new(n: usize) -> Dsu {
        Dsu {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            self.parent[x] = self.parent[self.parent[x] as usize];
            x = self.parent[x] as usize;
        }
        x
    }

    /// Returns true if the union joined two distinct components.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra as u32;
        self.size[ra] += self.size[rb];
        true
    }
}
