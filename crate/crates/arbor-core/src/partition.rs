use crate::error::{Error, Result};
use crate::subset::Subset;

/// Default ground-size cap for set-partition enumeration.
pub const DEFAULT_PARTITION_N: usize = 20;
/// Default ground-size cap for ordered set-partition enumeration.
pub const DEFAULT_ORDERED_N: usize = 10;

/// An unordered partition of `{0,..,n-1}` into nonempty blocks, stored as a
/// restricted-growth string: `a[0] = 0` and `a[i] <= 1 + max(a[..i])`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetPartition {
    assignment: Vec<u8>,
    block_count: usize,
}

impl SetPartition {
    pub fn from_rgs(assignment: Vec<u8>) -> SetPartition {
        assert!(is_restricted_growth(&assignment), "not a restricted-growth string");
        let block_count = assignment.iter().map(|&v| v as usize + 1).max().unwrap_or(0);
        SetPartition {
            assignment,
            block_count,
        }
    }

    pub fn rgs(&self) -> &[u8] {
        &self.assignment
    }

    pub fn universe_size(&self) -> usize {
        self.assignment.len()
    }

    pub fn block_count(&self) -> usize {
        self.block_count
    }

    /// Blocks in order of first appearance (equivalently increasing minimum
    /// element).
    pub fn blocks(&self) -> Vec<Subset> {
        let n = self.assignment.len();
        let mut blocks = vec![Subset::empty(n); self.block_count];
        for (i, &v) in self.assignment.iter().enumerate() {
            blocks[v as usize] = blocks[v as usize].with(i);
        }
        blocks
    }
}

pub fn is_restricted_growth(assignment: &[u8]) -> bool {
    let mut max_seen: i32 = -1;
    for &v in assignment {
        if v as i32 > max_seen + 1 {
            return false;
        }
        max_seen = max_seen.max(v as i32);
    }
    true
}

/// A sequence of disjoint nonempty blocks covering `{0,..,n-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderedSetPartition {
    universe: usize,
    blocks: Vec<Subset>,
}

impl OrderedSetPartition {
    pub fn new(universe: usize, blocks: Vec<Subset>) -> OrderedSetPartition {
        let mut seen = Subset::empty(universe);
        for b in &blocks {
            assert_eq!(b.universe_size(), universe, "block universe mismatch");
            assert!(!b.is_empty(), "ordered set partitions have no empty blocks");
            assert!(seen.is_disjoint_from(b), "blocks overlap");
            seen = seen.union(b);
        }
        assert_eq!(seen, Subset::full(universe), "blocks do not cover the ground set");
        OrderedSetPartition { universe, blocks }
    }

    /// The order type of an integer vector: group equal values into blocks,
    /// ordered by increasing value.
    pub fn from_assignment(values: &[i64]) -> OrderedSetPartition {
        let n = values.len();
        let mut distinct: Vec<i64> = values.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        let blocks = distinct
            .iter()
            .map(|&v| {
                let elems: Vec<usize> =
                    (0..n).filter(|&i| values[i] == v).collect();
                Subset::from_elements(n, &elems)
            })
            .collect();
        OrderedSetPartition {
            universe: n,
            blocks,
        }
    }

    pub fn universe_size(&self) -> usize {
        self.universe
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Subset] {
        &self.blocks
    }

    /// `positions()[i]` is the index of the block containing element `i`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.universe];
        for (b, block) in self.blocks.iter().enumerate() {
            for e in block.iter() {
                pos[e] = b;
            }
        }
        pos
    }
}

/// Streaming enumeration of set partitions whose blocks all satisfy
/// `block_ok`, in lexicographic restricted-growth order.
///
/// Pruning: element `i` joins a block only if the extended block still
/// satisfies `block_ok`, which keeps exactly the right partitions when
/// `block_ok` is hereditary (true on every subset of an accepted set).
/// Hereditariness is the caller's obligation.
pub struct PartitionIter<F> {
    n: usize,
    max_blocks: usize,
    block_ok: F,
    rgs: Vec<u8>,
    block_masks: Vec<u64>,
    next_value: Vec<u8>,
    pos: usize,
    state: IterState,
}

enum IterState {
    EmptyUniverse,
    Running,
    Done,
}

impl<F: Fn(Subset) -> bool> PartitionIter<F> {
    fn new(n: usize, max_blocks: usize, block_ok: F) -> PartitionIter<F> {
        PartitionIter {
            n,
            max_blocks,
            block_ok,
            rgs: vec![0; n],
            block_masks: Vec::new(),
            next_value: vec![0; n],
            pos: 0,
            state: if n == 0 {
                IterState::EmptyUniverse
            } else {
                IterState::Running
            },
        }
    }

    fn step_back(&mut self) {
        self.pos -= 1;
        let v = self.rgs[self.pos] as usize;
        let bit = 1u64 << self.pos;
        if self.block_masks[v] == bit {
            self.block_masks.pop();
        } else {
            self.block_masks[v] &= !bit;
        }
    }
}

impl<F: Fn(Subset) -> bool> Iterator for PartitionIter<F> {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        match self.state {
            IterState::Done => return None,
            IterState::EmptyUniverse => {
                self.state = IterState::Done;
                return Some(SetPartition {
                    assignment: Vec::new(),
                    block_count: 0,
                });
            }
            IterState::Running => {}
        }
        loop {
            if self.pos == self.n {
                let item = SetPartition {
                    assignment: self.rgs.clone(),
                    block_count: self.block_masks.len(),
                };
                self.step_back();
                return Some(item);
            }
            let bit = 1u64 << self.pos;
            let existing = self.block_masks.len();
            let limit = if existing < self.max_blocks { existing } else { existing - 1 };
            let mut v = self.next_value[self.pos] as usize;
            let mut placed = false;
            while v <= limit {
                let mask = if v < existing { self.block_masks[v] | bit } else { bit };
                if (self.block_ok)(Subset::from_bits(mask, self.n)) {
                    self.rgs[self.pos] = v as u8;
                    if v < existing {
                        self.block_masks[v] = mask;
                    } else {
                        self.block_masks.push(mask);
                    }
                    self.next_value[self.pos] = (v + 1) as u8;
                    self.pos += 1;
                    if self.pos < self.n {
                        self.next_value[self.pos] = 0;
                    }
                    placed = true;
                    break;
                }
                v += 1;
            }
            if !placed {
                if self.pos == 0 {
                    self.state = IterState::Done;
                    return None;
                }
                self.step_back();
            }
        }
    }
}

/// Set partitions of `{0,..,n-1}` with every block accepted by `block_ok`,
/// under the default size cap.
pub fn set_partitions<F: Fn(Subset) -> bool>(
    n: usize,
    block_ok: F,
) -> Result<PartitionIter<F>> {
    set_partitions_with_cap(n, DEFAULT_PARTITION_N, block_ok)
}

pub fn set_partitions_with_cap<F: Fn(Subset) -> bool>(
    n: usize,
    cap: usize,
    block_ok: F,
) -> Result<PartitionIter<F>> {
    if n > cap {
        return Err(Error::SizeCap {
            what: "set partition enumeration",
            limit: cap,
            requested: n,
        });
    }
    Ok(PartitionIter::new(n, n.max(1), block_ok))
}

fn count_dfs<F: Fn(Subset) -> bool>(
    n: usize,
    pos: usize,
    block_masks: &mut Vec<u64>,
    block_ok: &F,
    counts: &mut [u64],
) {
    if pos == n {
        counts[block_masks.len() - 1] += 1;
        return;
    }
    let bit = 1u64 << pos;
    for v in 0..block_masks.len() {
        let mask = block_masks[v] | bit;
        if block_ok(Subset::from_bits(mask, n)) {
            let old = block_masks[v];
            block_masks[v] = mask;
            count_dfs(n, pos + 1, block_masks, block_ok, counts);
            block_masks[v] = old;
        }
    }
    if block_ok(Subset::from_bits(bit, n)) {
        block_masks.push(bit);
        count_dfs(n, pos + 1, block_masks, block_ok, counts);
        block_masks.pop();
    }
}

/// `result[i-1]` is the number of set partitions with exactly `i` blocks,
/// all blocks satisfying `block_ok`.
pub fn count_by_block_count<F: Fn(Subset) -> bool + Sync>(
    n: usize,
    block_ok: F,
) -> Result<Vec<u64>> {
    count_by_block_count_threaded(n, block_ok, 1)
}

pub fn count_by_block_count_threaded<F: Fn(Subset) -> bool + Sync>(
    n: usize,
    block_ok: F,
    threads: usize,
) -> Result<Vec<u64>> {
    count_by_block_count_with_cap(n, DEFAULT_PARTITION_N, block_ok, threads)
}

pub fn count_by_block_count_with_cap<F: Fn(Subset) -> bool + Sync>(
    n: usize,
    cap: usize,
    block_ok: F,
    threads: usize,
) -> Result<Vec<u64>> {
    if n > cap {
        return Err(Error::SizeCap {
            what: "set partition enumeration",
            limit: cap,
            requested: n,
        });
    }
    let mut counts = vec![0u64; n];
    if n == 0 {
        return Ok(counts);
    }
    // Seed depth for the work split: deep enough to spread load, shallow
    // enough that seed enumeration stays trivial.
    const SEED_DEPTH: usize = 6;
    if threads <= 1 || n <= SEED_DEPTH {
        let mut masks = Vec::new();
        count_dfs(n, 0, &mut masks, &block_ok, &mut counts);
        return Ok(counts);
    }

    // Enumerate the pruned prefix states at the seed depth, then finish
    // each seed independently. Per-seed results are exact integer vectors,
    // so any grouping of seeds sums to the same totals.
    let mut seeds: Vec<Vec<u64>> = Vec::new();
    collect_seeds(n, SEED_DEPTH, 0, &mut Vec::new(), &block_ok, &mut seeds);
    let block_ok_ref = &block_ok;
    let totals = std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for worker in 0..threads {
            let worker_seeds: Vec<Vec<u64>> = seeds
                .iter()
                .skip(worker)
                .step_by(threads)
                .cloned()
                .collect();
            handles.push(scope.spawn(move || {
                let mut local = vec![0u64; n];
                for seed in worker_seeds {
                    let mut masks = seed;
                    count_dfs(n, SEED_DEPTH, &mut masks, block_ok_ref, &mut local);
                }
                local
            }));
        }
        let mut totals = vec![0u64; n];
        for handle in handles {
            let local = handle.join().expect("partition worker panicked");
            for (t, l) in totals.iter_mut().zip(local) {
                *t += l;
            }
        }
        totals
    });
    Ok(totals)
}

fn collect_seeds<F: Fn(Subset) -> bool>(
    n: usize,
    depth: usize,
    pos: usize,
    block_masks: &mut Vec<u64>,
    block_ok: &F,
    seeds: &mut Vec<Vec<u64>>,
) {
    if pos == depth {
        seeds.push(block_masks.clone());
        return;
    }
    let bit = 1u64 << pos;
    for v in 0..block_masks.len() {
        let mask = block_masks[v] | bit;
        if block_ok(Subset::from_bits(mask, n)) {
            let old = block_masks[v];
            block_masks[v] = mask;
            collect_seeds(n, depth, pos + 1, block_masks, block_ok, seeds);
            block_masks[v] = old;
        }
    }
    if block_ok(Subset::from_bits(bit, n)) {
        block_masks.push(bit);
        collect_seeds(n, depth, pos + 1, block_masks, block_ok, seeds);
        block_masks.pop();
    }
}

/// Streaming enumeration of ordered set partitions: each unordered
/// partition (restricted-growth order) expanded into all block orderings
/// (lexicographic permutations).
pub struct OrderedPartitionIter<F> {
    inner: PartitionIter<F>,
    universe: usize,
    blocks: Vec<Subset>,
    perm: Vec<usize>,
    perm_live: bool,
}

impl<F: Fn(Subset) -> bool> Iterator for OrderedPartitionIter<F> {
    type Item = OrderedSetPartition;

    fn next(&mut self) -> Option<OrderedSetPartition> {
        loop {
            if self.perm_live {
                let osp = OrderedSetPartition {
                    universe: self.universe,
                    blocks: self.perm.iter().map(|&i| self.blocks[i]).collect(),
                };
                self.perm_live = next_permutation(&mut self.perm);
                return Some(osp);
            }
            let partition = self.inner.next()?;
            self.blocks = partition.blocks();
            self.perm = (0..self.blocks.len()).collect();
            self.perm_live = true;
        }
    }
}

fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// All ordered set partitions of `{0,..,n-1}` with at most `max_blocks`
/// blocks, each emitted exactly once.
pub fn ordered_partitions(
    n: usize,
    max_blocks: usize,
) -> Result<OrderedPartitionIter<fn(Subset) -> bool>> {
    ordered_partitions_with_cap(n, max_blocks, DEFAULT_ORDERED_N)
}

pub fn ordered_partitions_with_cap(
    n: usize,
    max_blocks: usize,
    cap: usize,
) -> Result<OrderedPartitionIter<fn(Subset) -> bool>> {
    if n > cap {
        return Err(Error::SizeCap {
            what: "ordered set partition enumeration",
            limit: cap,
            requested: n,
        });
    }
    fn always(_: Subset) -> bool {
        true
    }
    Ok(OrderedPartitionIter {
        inner: PartitionIter::new(n, max_blocks.max(1).min(n.max(1)), always),
        universe: n,
        blocks: Vec::new(),
        perm: Vec::new(),
        perm_live: false,
    })
}
