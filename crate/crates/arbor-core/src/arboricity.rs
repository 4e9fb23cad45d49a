use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::polynomial::IntPolynomial;
use crate::scheduling::{scheduling_polynomial_with_caps, SchedulePredicate, DEFAULT_SYMMETRIC_N};
use crate::subset::Subset;
use std::cmp::Ordering;
use std::collections::VecDeque;

/// Default ground-size cap for the max-ratio subset scan.
pub const DEFAULT_SCAN_N: usize = 20;
/// Default ground-size cap for the cover-counting polynomial.
pub const DEFAULT_POLY_N: usize = DEFAULT_SYMMETRIC_N;
/// Default work budget for the brute-force cover count.
pub const DEFAULT_BRUTE_BUDGET: u64 = 100_000_000;

/// The arboricity of a matroid: finite for loopless matroids, unbounded
/// when a loop makes every cover impossible.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ArboricityValue {
    Finite(usize),
    Unbounded,
}

impl std::fmt::Display for ArboricityValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ArboricityValue::Finite(v) => write!(f, "{v}"),
            ArboricityValue::Unbounded => write!(f, "unbounded"),
        }
    }
}

/// Arboricity number plus the subset attaining the maximum ratio
/// `ceil(|X| / rk(X))` (lexicographically least among maximizers; for an
/// unbounded matroid, the least loop as a singleton). A constructive
/// partition into that many independent sets can be attached.
#[derive(Clone, Debug)]
pub struct ArboricityResult {
    pub value: ArboricityValue,
    pub witness: Subset,
    pub partition: Option<Vec<Subset>>,
}

/// `a(M) = max over nonempty X of ceil(|X| / rk(X))`, by scanning all
/// subsets. The empty matroid has arboricity 0.
pub fn arboricity_number(matroid: &Matroid) -> Result<ArboricityResult> {
    arboricity_number_with_cap(matroid, DEFAULT_SCAN_N)
}

pub fn arboricity_number_with_cap(matroid: &Matroid, cap: usize) -> Result<ArboricityResult> {
    let n = matroid.ground_size();
    if n > cap {
        return Err(Error::SizeCap {
            what: "arboricity subset scan",
            limit: cap,
            requested: n,
        });
    }
    if n == 0 {
        return Ok(ArboricityResult {
            value: ArboricityValue::Finite(0),
            witness: Subset::empty(0),
            partition: Some(Vec::new()),
        });
    }
    if let Some(e) = matroid.first_loop() {
        return Ok(ArboricityResult {
            value: ArboricityValue::Unbounded,
            witness: Subset::empty(n).with(e),
            partition: None,
        });
    }
    let mut best_ratio = 0usize;
    let mut best_witness = Subset::empty(n);
    for bits in 1..(1u128 << n) {
        let x = Subset::from_bits(bits as u64, n);
        let rank = matroid.rank(&x);
        let ratio = x.len().div_ceil(rank);
        match ratio.cmp(&best_ratio) {
            Ordering::Greater => {
                best_ratio = ratio;
                best_witness = x;
            }
            Ordering::Equal => {
                if x.lex_cmp(&best_witness) == Ordering::Less {
                    best_witness = x;
                }
            }
            Ordering::Less => {}
        }
    }
    Ok(ArboricityResult {
        value: ArboricityValue::Finite(best_ratio),
        witness: best_witness,
        partition: None,
    })
}

/// Arboricity number with a constructive minimum partition attached.
pub fn arboricity_number_with_partition(matroid: &Matroid) -> Result<ArboricityResult> {
    let mut result = arboricity_number(matroid)?;
    if let ArboricityValue::Finite(value) = result.value {
        if matroid.ground_size() > 0 {
            let blocks = arboricity_partition(matroid, value)?;
            result.partition = Some(blocks.expect("a partition of size a(M) must exist"));
        }
    }
    Ok(result)
}

/// Partitions the ground set into at most `k` independent sets, or `None`
/// when no such partition exists. Incremental insertion with breadth-first
/// augmenting paths in the exchange graph: an arc `u -> v` means `u` can
/// replace `v` in `v`'s block, and a free slot ends a path.
pub fn arboricity_partition(matroid: &Matroid, k: usize) -> Result<Option<Vec<Subset>>> {
    let n = matroid.ground_size();
    if let Some(e) = matroid.first_loop() {
        return Err(Error::HasLoop { element: e });
    }
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    if k == 0 {
        return Ok(None);
    }
    let slots = k.min(n);
    let mut blocks: Vec<Subset> = vec![Subset::empty(n); slots];
    let mut placement: Vec<Option<usize>> = vec![None; n];

    for e in 0..n {
        if !insert_with_augmentation(matroid, e, &mut blocks, &mut placement) {
            return Ok(None);
        }
    }
    let out: Vec<Subset> = blocks.into_iter().filter(|b| !b.is_empty()).collect();
    debug_assert!(out.iter().all(|b| matroid.is_independent(b)));
    debug_assert_eq!(
        out.iter().fold(Subset::empty(n), |acc, b| {
            assert!(acc.is_disjoint_from(b));
            acc.union(b)
        }),
        Subset::full(n)
    );
    Ok(Some(out))
}

fn insert_with_augmentation(
    matroid: &Matroid,
    new_element: usize,
    blocks: &mut [Subset],
    placement: &mut [Option<usize>],
) -> bool {
    let n = placement.len();
    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut seen = vec![false; n];
    seen[new_element] = true;
    let mut queue = VecDeque::from([new_element]);

    while let Some(u) = queue.pop_front() {
        // A slot whose block accepts u directly ends the path.
        let open_slot = (0..blocks.len())
            .find(|&j| !blocks[j].contains(u) && matroid.is_independent(&blocks[j].with(u)));
        if let Some(j) = open_slot {
            augment(u, j, &parent, blocks, placement);
            return true;
        }
        // Otherwise u may displace a placed element.
        for v in 0..n {
            if seen[v] || u == v {
                continue;
            }
            let Some(b) = placement[v] else { continue };
            let swapped = blocks[b].without(v).with(u);
            if matroid.is_independent(&swapped) {
                seen[v] = true;
                parent[v] = Some(u);
                queue.push_back(v);
            }
        }
    }
    false
}

/// Applies the augmenting path ending at `last`, which enters block `slot`;
/// each predecessor takes over the block its successor vacated.
fn augment(
    last: usize,
    slot: usize,
    parent: &[Option<usize>],
    blocks: &mut [Subset],
    placement: &mut [Option<usize>],
) {
    let mut mover = last;
    let mut dest = slot;
    loop {
        let vacated = placement[mover];
        if let Some(old) = vacated {
            blocks[old] = blocks[old].without(mover);
        }
        blocks[dest] = blocks[dest].with(mover);
        placement[mover] = Some(dest);
        match parent[mover] {
            Some(p) => {
                dest = vacated.expect("interior path nodes are placed elements");
                mover = p;
            }
            None => break,
        }
    }
}

/// The cover-counting polynomial: the number of maps `g: E -> [k]` with
/// every fiber independent, as a polynomial in `k`. Matroids with loops
/// have no covers at all, so their polynomial is zero; the empty matroid
/// has exactly the empty cover, so its polynomial is 1.
pub fn arboricity_polynomial(matroid: &Matroid) -> Result<IntPolynomial> {
    arboricity_polynomial_threaded(matroid, 1)
}

pub fn arboricity_polynomial_threaded(matroid: &Matroid, threads: usize) -> Result<IntPolynomial> {
    arboricity_polynomial_with_cap(matroid, DEFAULT_POLY_N, threads)
}

pub fn arboricity_polynomial_with_cap(
    matroid: &Matroid,
    cap: usize,
    threads: usize,
) -> Result<IntPolynomial> {
    scheduling_polynomial_with_caps(
        SchedulePredicate::BlocksIndependent(matroid),
        threads,
        cap,
        cap,
    )
}

/// Literal cover count: enumerates maps `g: E -> [k]` directly and counts
/// those whose fibers are all independent. The oracle for the polynomial.
pub fn brute_force_covers(matroid: &Matroid, k: u64) -> Result<u64> {
    brute_force_covers_with_budget(matroid, k, DEFAULT_BRUTE_BUDGET)
}

pub fn brute_force_covers_with_budget(
    matroid: &Matroid,
    k: u64,
    budget: u64,
) -> Result<u64> {
    let n = matroid.ground_size();
    let mut needed: u128 = 1;
    for _ in 0..n {
        needed = needed.saturating_mul(k as u128);
        if needed > budget as u128 {
            return Err(Error::BudgetExceeded { needed, budget });
        }
    }
    if n == 0 {
        return Ok(1);
    }
    if k == 0 {
        return Ok(0);
    }
    let mut fibers = vec![Subset::empty(n); k as usize];
    let mut count = 0u64;
    count_covers(matroid, n, 0, &mut fibers, &mut count);
    Ok(count)
}

fn count_covers(
    matroid: &Matroid,
    n: usize,
    element: usize,
    fibers: &mut [Subset],
    count: &mut u64,
) {
    if element == n {
        *count += 1;
        return;
    }
    for j in 0..fibers.len() {
        let extended = fibers[j].with(element);
        if matroid.is_independent(&extended) {
            let old = fibers[j];
            fibers[j] = extended;
            count_covers(matroid, n, element + 1, fibers, count);
            fibers[j] = old;
        }
    }
}
