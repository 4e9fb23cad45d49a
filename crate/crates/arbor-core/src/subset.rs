use std::cmp::Ordering;
use std::fmt;

/// Hard representation bound: subsets are stored as `u64` bitmasks.
pub const MAX_UNIVERSE: usize = 64;

/// A subset of the ground set `{0, .., n-1}`, stored as a bitmask.
///
/// Element `i` is present iff bit `i` of `bits` is set. Two subsets only
/// compare or combine when they share the same universe size; mixing
/// universes is a caller bug and panics.
#[derive(Copy, Clone, PartialEq, Eq, Hash)]
pub struct Subset {
    bits: u64,
    universe: usize,
}

impl Subset {
    pub fn empty(universe: usize) -> Self {
        assert!(universe <= MAX_UNIVERSE, "universe {universe} exceeds {MAX_UNIVERSE}");
        Subset { bits: 0, universe }
    }

    pub fn full(universe: usize) -> Self {
        assert!(universe <= MAX_UNIVERSE, "universe {universe} exceeds {MAX_UNIVERSE}");
        let bits = if universe == 64 { !0 } else { (1u64 << universe) - 1 };
        Subset { bits, universe }
    }

    /// Builds a subset from a raw mask. Bits at or above `universe` must be clear.
    pub fn from_bits(bits: u64, universe: usize) -> Self {
        assert!(universe <= MAX_UNIVERSE, "universe {universe} exceeds {MAX_UNIVERSE}");
        assert_eq!(
            bits & !Subset::full(universe).bits,
            0,
            "mask has bits outside the universe"
        );
        Subset { bits, universe }
    }

    pub fn from_elements(universe: usize, elements: &[usize]) -> Self {
        let mut s = Subset::empty(universe);
        for &e in elements {
            assert!(e < universe, "element {e} outside universe of size {universe}");
            s.bits |= 1 << e;
        }
        s
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn universe_size(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, element: usize) -> bool {
        element < self.universe && self.bits >> element & 1 == 1
    }

    pub fn with(&self, element: usize) -> Self {
        assert!(element < self.universe);
        Subset {
            bits: self.bits | 1 << element,
            universe: self.universe,
        }
    }

    pub fn without(&self, element: usize) -> Self {
        assert!(element < self.universe);
        Subset {
            bits: self.bits & !(1 << element),
            universe: self.universe,
        }
    }

    pub fn union(&self, other: &Subset) -> Self {
        self.check_universe(other);
        Subset {
            bits: self.bits | other.bits,
            universe: self.universe,
        }
    }

    pub fn intersection(&self, other: &Subset) -> Self {
        self.check_universe(other);
        Subset {
            bits: self.bits & other.bits,
            universe: self.universe,
        }
    }

    pub fn difference(&self, other: &Subset) -> Self {
        self.check_universe(other);
        Subset {
            bits: self.bits & !other.bits,
            universe: self.universe,
        }
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.check_universe(other);
        self.bits & !other.bits == 0
    }

    pub fn is_disjoint_from(&self, other: &Subset) -> bool {
        self.check_universe(other);
        self.bits & other.bits == 0
    }

    /// Iterates elements in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let mut rest = self.bits;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let e = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(e)
            }
        })
    }

    pub fn elements(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Lexicographic order on the sorted element sequence, so
    /// `{0,2} < {1}` and `{0} < {0,1}`. Used for deterministic tie-breaks.
    pub fn lex_cmp(&self, other: &Subset) -> Ordering {
        self.check_universe(other);
        let (mut a, mut b) = (self.bits, other.bits);
        loop {
            match (a == 0, b == 0) {
                (true, true) => return Ordering::Equal,
                (true, false) => return Ordering::Less,
                (false, true) => return Ordering::Greater,
                (false, false) => {}
            }
            let (ea, eb) = (a.trailing_zeros(), b.trailing_zeros());
            if ea != eb {
                return ea.cmp(&eb);
            }
            a &= a - 1;
            b &= b - 1;
        }
    }

    fn check_universe(&self, other: &Subset) {
        assert_eq!(
            self.universe, other.universe,
            "universe size mismatch: {} vs {}",
            self.universe, other.universe
        );
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subset({self})")
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// All subsets of `{0,..,n-1}` ordered by cardinality, then lexicographically
/// by element sequence within each cardinality.
pub fn subsets_by_cardinality(universe: usize) -> impl Iterator<Item = Subset> {
    assert!(universe <= MAX_UNIVERSE);
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); universe + 1];
    let count: u128 = 1u128 << universe;
    let mut mask: u128 = 0;
    while mask < count {
        let m = mask as u64;
        by_size[m.count_ones() as usize].push(m);
        mask += 1;
    }
    let mut groups: Vec<Vec<u64>> = by_size;
    for group in &mut groups {
        group.sort_by(|a, b| {
            Subset::from_bits(*a, universe).lex_cmp(&Subset::from_bits(*b, universe))
        });
    }
    groups
        .into_iter()
        .flatten()
        .map(move |m| Subset::from_bits(m, universe))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_and_queries() {
        let s = Subset::from_elements(5, &[0, 2, 4]);
        assert_eq!(s.len(), 3);
        assert!(s.contains(0) && s.contains(2) && s.contains(4));
        assert!(!s.contains(1) && !s.contains(3));
        assert_eq!(s.elements(), vec![0, 2, 4]);
        assert_eq!(s.to_string(), "{0,2,4}");
        assert_eq!(Subset::full(3).bits(), 0b111);
        assert_eq!(Subset::full(64).len(), 64);
    }

    #[test]
    fn set_algebra() {
        let a = Subset::from_elements(4, &[0, 1]);
        let b = Subset::from_elements(4, &[1, 2]);
        assert_eq!(a.union(&b).elements(), vec![0, 1, 2]);
        assert_eq!(a.intersection(&b).elements(), vec![1]);
        assert_eq!(a.difference(&b).elements(), vec![0]);
        assert!(a.intersection(&b).is_subset_of(&a));
        assert!(!a.is_disjoint_from(&b));
        assert!(a.difference(&b).is_disjoint_from(&b));
    }

    #[test]
    #[should_panic(expected = "universe size mismatch")]
    fn universe_mismatch_panics() {
        let a = Subset::empty(3);
        let b = Subset::empty(4);
        let _ = a.union(&b);
    }

    #[test]
    fn lex_order_matches_element_sequences() {
        // {0} < {0,1} < {0,1,2} < {0,2} < {1} < {1,2} < {2}
        let seqs: Vec<Vec<usize>> = vec![
            vec![0],
            vec![0, 1],
            vec![0, 1, 2],
            vec![0, 2],
            vec![1],
            vec![1, 2],
            vec![2],
        ];
        for w in seqs.windows(2) {
            let a = Subset::from_elements(3, &w[0]);
            let b = Subset::from_elements(3, &w[1]);
            assert_eq!(a.lex_cmp(&b), Ordering::Less, "{a} vs {b}");
            assert_eq!(b.lex_cmp(&a), Ordering::Greater);
        }
        let s = Subset::from_elements(3, &[0, 2]);
        assert_eq!(s.lex_cmp(&s), Ordering::Equal);
    }

    #[test]
    fn cardinality_scan_order() {
        let all: Vec<Subset> = subsets_by_cardinality(3).collect();
        assert_eq!(all.len(), 8);
        let printed: Vec<String> = all.iter().map(|s| s.to_string()).collect();
        assert_eq!(
            printed,
            vec!["{}", "{0}", "{1}", "{2}", "{0,1}", "{0,2}", "{1,2}", "{0,1,2}"]
        );
    }
}
