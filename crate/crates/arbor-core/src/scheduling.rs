use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::partition::{
    count_by_block_count_with_cap, ordered_partitions_with_cap, OrderedSetPartition,
    DEFAULT_ORDERED_N,
};
use crate::polynomial::{binomial, falling_factorial, from_block_counts, IntPolynomial};
use crate::subset::Subset;

/// Ground-size cap for block-symmetric counting (unordered enumeration).
pub const DEFAULT_SYMMETRIC_N: usize = 16;

/// Boolean combination of order atoms `x_i <= x_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    /// `x_i <= x_j`: item `i` is scheduled no later than item `j`.
    Atom(usize, usize),
    Not(Box<Expr>),
    /// Conjunction; empty means `true`.
    And(Vec<Expr>),
    /// Disjunction; empty means `false`.
    Or(Vec<Expr>),
}

impl Expr {
    fn max_item(&self) -> Option<usize> {
        match self {
            Expr::Atom(i, j) => Some(*i.max(j)),
            Expr::Not(inner) => inner.max_item(),
            Expr::And(children) | Expr::Or(children) => {
                children.iter().filter_map(Expr::max_item).max()
            }
        }
    }
}

/// A scheduling problem on `items` items: a formula over atoms
/// `x_i <= x_j`, satisfied or not by any assignment of time slots, and
/// well-defined on ordered set partitions because truth only depends on
/// the relative order of the values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchedulingFormula {
    items: usize,
    root: Expr,
}

impl SchedulingFormula {
    pub fn new(items: usize, root: Expr) -> SchedulingFormula {
        if let Some(max) = root.max_item() {
            assert!(max < items, "atom index {max} outside item range 0..{items}");
        }
        SchedulingFormula { items, root }
    }

    pub fn items(&self) -> usize {
        self.items
    }

    pub fn root(&self) -> &Expr {
        &self.root
    }

    /// Truth value on an ordered set partition: atom `x_i <= x_j` holds iff
    /// the block of `i` comes no later than the block of `j`.
    pub fn eval_on_ordered_partition(&self, osp: &OrderedSetPartition) -> bool {
        assert_eq!(
            osp.universe_size(),
            self.items,
            "partition of {} elements fed to a formula on {} items",
            osp.universe_size(),
            self.items
        );
        let pos = osp.positions();
        eval_expr(&self.root, &|i, j| pos[i] <= pos[j])
    }

    /// Truth value on a concrete slot assignment.
    pub fn eval_on_assignment(&self, values: &[i64]) -> bool {
        assert_eq!(values.len(), self.items, "assignment length mismatch");
        eval_expr(&self.root, &|i, j| values[i] <= values[j])
    }
}

fn eval_expr(expr: &Expr, atom: &dyn Fn(usize, usize) -> bool) -> bool {
    match expr {
        Expr::Atom(i, j) => atom(*i, *j),
        Expr::Not(inner) => !eval_expr(inner, atom),
        Expr::And(children) => children.iter().all(|c| eval_expr(c, atom)),
        Expr::Or(children) => children.iter().any(|c| eval_expr(c, atom)),
    }
}

/// What to count schedules against: an explicit formula (general, possibly
/// asymmetric) or the opaque blocks-all-independent predicate of a matroid,
/// which is invariant under permuting blocks. The variant is the symmetry
/// tag: it decides between ordered enumeration and the `i!` shortcut.
#[derive(Clone, Copy)]
pub enum SchedulePredicate<'a> {
    Formula(&'a SchedulingFormula),
    BlocksIndependent(&'a Matroid),
}

impl SchedulePredicate<'_> {
    pub fn items(&self) -> usize {
        match self {
            SchedulePredicate::Formula(f) => f.items(),
            SchedulePredicate::BlocksIndependent(m) => m.ground_size(),
        }
    }
}

/// `x_i != x_j` desugared over the `<=` atom set.
fn not_equal(i: usize, j: usize) -> Expr {
    Expr::Not(Box::new(Expr::And(vec![Expr::Atom(i, j), Expr::Atom(j, i)])))
}

/// The coloring problem of a graph as a scheduling formula: adjacent
/// vertices get distinct slots. Its scheduling polynomial is the chromatic
/// polynomial.
pub fn chromatic_instance(vertices: usize, edges: &[(usize, usize)]) -> SchedulingFormula {
    let constraints = edges.iter().map(|&(a, b)| not_equal(a, b)).collect();
    SchedulingFormula::new(vertices, Expr::And(constraints))
}

/// The independent-cover problem of a matroid as a scheduling formula: for
/// every circuit, its elements must not all share a slot. Equality chains
/// are expanded into consecutive two-sided `<=` atoms.
pub fn arboricity_instance(matroid: &Matroid) -> Result<SchedulingFormula> {
    arboricity_instance_bounded(matroid, crate::matroid::DEFAULT_CIRCUIT_SCAN_N)
}

pub fn arboricity_instance_bounded(matroid: &Matroid, max_n: usize) -> Result<SchedulingFormula> {
    let circuits = matroid.circuits_bounded(max_n)?;
    let mut constraints = Vec::with_capacity(circuits.len());
    for circuit in circuits.circuits() {
        let elems = circuit.elements();
        let all_equal = Expr::And(
            elems
                .windows(2)
                .flat_map(|w| [Expr::Atom(w[0], w[1]), Expr::Atom(w[1], w[0])])
                .collect(),
        );
        constraints.push(Expr::Not(Box::new(all_equal)));
    }
    Ok(SchedulingFormula::new(matroid.ground_size(), Expr::And(constraints)))
}

/// Counts of satisfying ordered set partitions by block count:
/// `f[i-1]` = number with exactly `i` blocks.
fn formula_f_vector(formula: &SchedulingFormula, cap: usize) -> Result<Vec<u64>> {
    let n = formula.items();
    let mut f = vec![0u64; n];
    for osp in ordered_partitions_with_cap(n, n.max(1), cap)? {
        if formula.eval_on_ordered_partition(&osp) {
            f[osp.block_count() - 1] += 1;
        }
    }
    Ok(f)
}

fn symmetric_p_vector(
    matroid: &Matroid,
    cap: usize,
    threads: usize,
) -> Result<Vec<u64>> {
    count_by_block_count_with_cap(
        matroid.ground_size(),
        cap,
        |b: Subset| matroid.is_independent(&b),
        threads,
    )
}

/// The scheduling polynomial: the counting function of `k`-schedules,
/// `sum_i f_i * C(k,i)` over the satisfying ordered set partitions.
///
/// Block-symmetric predicates take the unordered route with `f_i = i! p_i`,
/// which always yields integer coefficients. General formulas may have a
/// counting polynomial with non-integer coefficients, reported as
/// [`Error::NonIntegerCoefficients`].
pub fn scheduling_polynomial(pred: SchedulePredicate<'_>, threads: usize) -> Result<IntPolynomial> {
    let (ordered_cap, symmetric_cap) = (DEFAULT_ORDERED_N, DEFAULT_SYMMETRIC_N);
    scheduling_polynomial_with_caps(pred, threads, ordered_cap, symmetric_cap)
}

pub fn scheduling_polynomial_with_caps(
    pred: SchedulePredicate<'_>,
    threads: usize,
    ordered_cap: usize,
    symmetric_cap: usize,
) -> Result<IntPolynomial> {
    if pred.items() == 0 {
        // The empty assignment satisfies anything vacuously: A(k) = 1.
        return Ok(IntPolynomial::one());
    }
    match pred {
        SchedulePredicate::Formula(formula) => {
            let f = formula_f_vector(formula, ordered_cap)?;
            polynomial_from_f_vector(&f)
        }
        SchedulePredicate::BlocksIndependent(matroid) => {
            let p = symmetric_p_vector(matroid, symmetric_cap, threads)?;
            from_block_counts(&p)
        }
    }
}

/// Expands `sum_j f_j * C(k,j)` exactly: scale by `n!`, accumulate in the
/// falling-factorial basis, divide back out.
fn polynomial_from_f_vector(f: &[u64]) -> Result<IntPolynomial> {
    let n = f.len();
    let n_fact = crate::polynomial::factorial(n)?;
    let mut acc = IntPolynomial::zero();
    for (idx, &count) in f.iter().enumerate() {
        if count == 0 {
            continue;
        }
        let j = idx + 1;
        // n! * C(k,j) = (n!/j!) * (k)_j
        let scale = n_fact / crate::polynomial::factorial(j)?;
        let term = falling_factorial(j)?
            .scale(count as i128)?
            .scale(scale)?;
        acc = acc.add(&term)?;
    }
    acc.div_exact(n_fact).ok_or(Error::NonIntegerCoefficients)
}

/// The number of `k`-schedules, `sum_i f_i * C(k,i)`, evaluated without
/// constructing the polynomial. Total even when the polynomial has
/// non-integer coefficients.
pub fn count_schedules(pred: SchedulePredicate<'_>, k: u64, threads: usize) -> Result<i128> {
    if pred.items() == 0 {
        return Ok(1);
    }
    let f_terms: Vec<(usize, i128)> = match pred {
        SchedulePredicate::Formula(formula) => formula_f_vector(formula, DEFAULT_ORDERED_N)?
            .iter()
            .enumerate()
            .map(|(idx, &c)| (idx + 1, c as i128))
            .collect(),
        SchedulePredicate::BlocksIndependent(matroid) => {
            symmetric_p_vector(matroid, DEFAULT_SYMMETRIC_N, threads)?
                .iter()
                .enumerate()
                .map(|(idx, &p)| {
                    let i = idx + 1;
                    Ok((i, crate::polynomial::factorial(i)?.checked_mul(p as i128).ok_or(Error::Overflow)?))
                })
                .collect::<Result<Vec<_>>>()?
        }
    };
    let mut total = 0i128;
    for (i, f_i) in f_terms {
        let b = binomial(k, i as u64)?;
        total = total
            .checked_add(f_i.checked_mul(b).ok_or(Error::Overflow)?)
            .ok_or(Error::Overflow)?;
    }
    Ok(total)
}

/// Parses the s-expression formula syntax:
/// `(atom i j)`, `(not F)`, `(and F..)`, `(or F..)`, `#` comments.
pub fn parse_formula(text: &str, items: usize) -> Result<SchedulingFormula> {
    let tokens = tokenize(text);
    let mut parser = Parser { tokens, at: 0 };
    let root = parser.parse_form()?;
    if let Some((line, tok)) = parser.peek() {
        return Err(Error::Parse {
            line,
            message: format!("unexpected trailing token `{tok}`"),
        });
    }
    if let Some(max) = root.max_item() {
        if max >= items {
            return Err(Error::Parse {
                line: 1,
                message: format!("atom index {max} out of range for {items} items"),
            });
        }
    }
    Ok(SchedulingFormula::new(items, root))
}

fn tokenize(text: &str) -> Vec<(usize, String)> {
    let mut tokens = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let mut cur = String::new();
        for ch in line.chars() {
            match ch {
                '(' | ')' => {
                    if !cur.is_empty() {
                        tokens.push((lineno + 1, std::mem::take(&mut cur)));
                    }
                    tokens.push((lineno + 1, ch.to_string()));
                }
                c if c.is_whitespace() => {
                    if !cur.is_empty() {
                        tokens.push((lineno + 1, std::mem::take(&mut cur)));
                    }
                }
                c => cur.push(c),
            }
        }
        if !cur.is_empty() {
            tokens.push((lineno + 1, cur));
        }
    }
    tokens
}

struct Parser {
    tokens: Vec<(usize, String)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> Option<(usize, &str)> {
        self.tokens.get(self.at).map(|(l, t)| (*l, t.as_str()))
    }

    fn bump(&mut self) -> Option<(usize, String)> {
        let t = self.tokens.get(self.at).cloned();
        self.at += 1;
        t
    }

    fn expect(&mut self, what: &str) -> Result<(usize, String)> {
        self.bump().ok_or_else(|| Error::Parse {
            line: self.tokens.last().map(|(l, _)| *l).unwrap_or(1),
            message: format!("expected {what}, found end of input"),
        })
    }

    fn parse_form(&mut self) -> Result<Expr> {
        let (line, tok) = self.expect("`(`")?;
        if tok != "(" {
            return Err(Error::Parse {
                line,
                message: format!("expected `(`, found `{tok}`"),
            });
        }
        let (line, op) = self.expect("an operator")?;
        let expr = match op.as_str() {
            "atom" => {
                let i = self.parse_index()?;
                let j = self.parse_index()?;
                Expr::Atom(i, j)
            }
            "not" => {
                let inner = self.parse_form()?;
                Expr::Not(Box::new(inner))
            }
            "and" | "or" => {
                let mut children = Vec::new();
                while let Some((_, t)) = self.peek() {
                    if t == ")" {
                        break;
                    }
                    children.push(self.parse_form()?);
                }
                if op == "and" {
                    Expr::And(children)
                } else {
                    Expr::Or(children)
                }
            }
            other => {
                return Err(Error::Parse {
                    line,
                    message: format!("unknown operator `{other}`"),
                })
            }
        };
        let (line, close) = self.expect("`)`")?;
        if close != ")" {
            return Err(Error::Parse {
                line,
                message: format!("expected `)`, found `{close}`"),
            });
        }
        Ok(expr)
    }

    fn parse_index(&mut self) -> Result<usize> {
        let (line, tok) = self.expect("an item index")?;
        tok.parse().map_err(|_| Error::Parse {
            line,
            message: format!("expected an item index, found `{tok}`"),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// The five-item example: tasks 3 and 4 simultaneous, task 5 no later
    /// than task 1 (1-based labels; 0-based atoms below).
    fn worked_example() -> SchedulingFormula {
        SchedulingFormula::new(
            5,
            Expr::And(vec![
                Expr::Atom(2, 3),
                Expr::Atom(4, 0),
                Expr::Atom(3, 2),
            ]),
        )
    }

    #[test]
    fn worked_example_classification() {
        let s = worked_example();
        let satisfying: [[i64; 5]; 4] = [
            [1, 3, 2, 2, 1],
            [3, 1, 3, 3, 2],
            [1, 1, 1, 1, 1],
            [2, 1, 2, 2, 1],
        ];
        let failing: [[i64; 5]; 3] = [
            [3, 2, 2, 3, 2],
            [1, 2, 3, 2, 3],
            [1, 1, 2, 1, 1],
        ];
        let k8: [[i64; 5]; 4] = [
            [8, 2, 6, 6, 8],
            [7, 1, 1, 1, 5],
            [7, 1, 1, 1, 6],
            [4, 8, 6, 6, 3],
        ];
        for a in satisfying {
            assert!(s.eval_on_assignment(&a), "{a:?} should satisfy");
            assert!(s.eval_on_ordered_partition(&OrderedSetPartition::from_assignment(&a)));
        }
        for a in failing {
            assert!(!s.eval_on_assignment(&a), "{a:?} should fail");
            assert!(!s.eval_on_ordered_partition(&OrderedSetPartition::from_assignment(&a)));
        }
        for a in k8 {
            assert!(a.iter().all(|&v| 1 <= v && v <= 8));
            assert!(s.eval_on_assignment(&a), "{a:?} should satisfy at k=8");
        }
        // (2,3,2,2,1) is sometimes quoted as a non-schedule, but every atom
        // of S holds on it: x3 = x4 = 2 and x5 = 1 <= x1 = 2. The evaluator
        // follows the formula.
        assert!(s.eval_on_assignment(&[2, 3, 2, 2, 1]));
    }

    #[test]
    fn reflexive_atom_is_trivially_true() {
        let s = SchedulingFormula::new(3, Expr::Atom(0, 0));
        for osp in ordered_partitions_with_cap(3, 3, 10).unwrap() {
            assert!(s.eval_on_ordered_partition(&osp));
        }
    }

    #[test]
    fn chromatic_triangle() {
        let k3 = chromatic_instance(3, &[(0, 1), (0, 2), (1, 2)]);
        let poly = scheduling_polynomial(SchedulePredicate::Formula(&k3), 1).unwrap();
        assert_eq!(poly.to_string(), "k^3 - 3k^2 + 2k");
        assert_eq!(poly.eval(2).unwrap(), 0);
        assert_eq!(poly.eval(3).unwrap(), 6);
        // Against brute-force proper colorings for k <= 5.
        for k in 0..=5i64 {
            let mut count = 0;
            let mut coloring = [0i64; 3];
            count_colorings(&k3, k, 0, &mut coloring, &mut count);
            assert_eq!(poly.eval(k as i128).unwrap(), count, "k = {k}");
        }
    }

    fn count_colorings(
        s: &SchedulingFormula,
        k: i64,
        at: usize,
        coloring: &mut [i64; 3],
        count: &mut i128,
    ) {
        if at == 3 {
            if s.eval_on_assignment(coloring) {
                *count += 1;
            }
            return;
        }
        for c in 1..=k {
            coloring[at] = c;
            count_colorings(s, k, at + 1, coloring, count);
        }
    }

    #[test]
    fn chromatic_edge_and_empty_graph() {
        let edge = chromatic_instance(2, &[(0, 1)]);
        let poly = scheduling_polynomial(SchedulePredicate::Formula(&edge), 1).unwrap();
        assert_eq!(poly.to_string(), "k^2 - k");
        let empty = chromatic_instance(4, &[]);
        let poly = scheduling_polynomial(SchedulePredicate::Formula(&empty), 1).unwrap();
        assert_eq!(poly.to_string(), "k^4");
    }

    #[test]
    fn trivially_true_problem_counts_all_maps() {
        let s = SchedulingFormula::new(2, Expr::And(vec![]));
        let poly = scheduling_polynomial(SchedulePredicate::Formula(&s), 1).unwrap();
        assert_eq!(poly.to_string(), "k^2");
    }

    #[test]
    fn arboricity_instance_matches_paper_polynomials() {
        use crate::matroid::Matroid;
        let c3 = Matroid::cycle(3);
        let formula = arboricity_instance(&c3).unwrap();
        let via_formula =
            scheduling_polynomial(SchedulePredicate::Formula(&formula), 1).unwrap();
        assert_eq!(via_formula.to_string(), "k^3 - k");
        let via_predicate =
            scheduling_polynomial(SchedulePredicate::BlocksIndependent(&c3), 1).unwrap();
        assert_eq!(via_formula, via_predicate);

        let free = Matroid::free(4);
        let formula = arboricity_instance(&free).unwrap();
        assert_eq!(formula.root(), &Expr::And(vec![]));
        let poly = scheduling_polynomial(SchedulePredicate::Formula(&formula), 1).unwrap();
        assert_eq!(poly.to_string(), "k^4");

        let u24 = Matroid::uniform(2, 4);
        let formula = arboricity_instance(&u24).unwrap();
        let poly = scheduling_polynomial(SchedulePredicate::Formula(&formula), 1).unwrap();
        assert_eq!(poly.to_string(), "k^4 - 4k^2 + 3k");
    }

    #[test]
    fn formula_and_independence_predicate_agree_on_every_partition() {
        use crate::matroid::Matroid;
        for m in [
            Matroid::cycle(3),
            Matroid::cycle(5),
            Matroid::uniform(2, 5),
            Matroid::complete_graph(4),
            Matroid::uniform(1, 2).direct_sum(&Matroid::uniform(1, 2)),
        ] {
            let n = m.ground_size();
            let formula = arboricity_instance(&m).unwrap();
            for osp in ordered_partitions_with_cap(n, n, 10).unwrap() {
                let by_formula = formula.eval_on_ordered_partition(&osp);
                let by_blocks = osp.blocks().iter().all(|b| m.is_independent(b));
                assert_eq!(by_formula, by_blocks, "n = {n}, osp = {osp:?}");
            }
        }
    }

    #[test]
    fn satisfying_partitions_stay_satisfying_under_block_permutation() {
        use crate::matroid::Matroid;
        for m in [Matroid::cycle(4), Matroid::uniform(2, 5)] {
            let n = m.ground_size();
            let formula = arboricity_instance(&m).unwrap();
            for osp in ordered_partitions_with_cap(n, n, 10).unwrap() {
                if !formula.eval_on_ordered_partition(&osp) {
                    continue;
                }
                // Rotate and reverse cover the orbit generators.
                let mut rotated = osp.blocks().to_vec();
                rotated.rotate_left(1);
                let rotated = OrderedSetPartition::new(n, rotated);
                assert!(formula.eval_on_ordered_partition(&rotated));
                let mut reversed = osp.blocks().to_vec();
                reversed.reverse();
                let reversed = OrderedSetPartition::new(n, reversed);
                assert!(formula.eval_on_ordered_partition(&reversed));
            }
        }
    }

    #[test]
    fn count_matches_brute_force_maps() {
        // A genuinely asymmetric formula: x_0 <= x_1.
        let s = SchedulingFormula::new(2, Expr::Atom(0, 1));
        for k in 0..=6u64 {
            let mut direct = 0i128;
            for a in 1..=k as i64 {
                for b in 1..=k as i64 {
                    if s.eval_on_assignment(&[a, b]) {
                        direct += 1;
                    }
                }
            }
            assert_eq!(
                count_schedules(SchedulePredicate::Formula(&s), k, 1).unwrap(),
                direct,
                "k = {k}"
            );
        }
        // Its counting polynomial is (k^2 + k)/2: not an integer polynomial.
        assert_eq!(
            scheduling_polynomial(SchedulePredicate::Formula(&s), 1),
            Err(Error::NonIntegerCoefficients)
        );
    }

    #[test]
    fn parse_round_trip() {
        let text = "(and (atom 2 3) (atom 3 2) (atom 4 0))";
        let parsed = parse_formula(text, 5).unwrap();
        assert_eq!(
            parsed.root(),
            &Expr::And(vec![Expr::Atom(2, 3), Expr::Atom(3, 2), Expr::Atom(4, 0)])
        );
        let nested = "(or (not (atom 0 1)) (and))";
        let parsed = parse_formula(nested, 2).unwrap();
        assert_eq!(
            parsed.root(),
            &Expr::Or(vec![
                Expr::Not(Box::new(Expr::Atom(0, 1))),
                Expr::And(vec![])
            ])
        );
        // Comments and newlines are fine.
        let commented = "# constraint file\n(and # conjunction\n  (atom 0 1))\n";
        assert!(parse_formula(commented, 2).is_ok());
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        match parse_formula("(and\n  (atom 0 x))", 3) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(matches!(parse_formula("(atom 0 5)", 3), Err(Error::Parse { .. })));
        assert!(matches!(parse_formula("(frob 1 2)", 3), Err(Error::Parse { .. })));
        assert!(matches!(parse_formula("(atom 0 1) junk", 3), Err(Error::Parse { .. })));
        assert!(matches!(parse_formula("(atom 0 1", 3), Err(Error::Parse { .. })));
    }

    fn arb_expr(items: usize) -> impl Strategy<Value = Expr> {
        let leaf = (0..items, 0..items).prop_map(|(i, j)| Expr::Atom(i, j));
        leaf.prop_recursive(3, 24, 3, |inner| {
            prop_oneof![
                inner.clone().prop_map(|e| Expr::Not(Box::new(e))),
                proptest::collection::vec(inner.clone(), 0..3).prop_map(Expr::And),
                proptest::collection::vec(inner, 0..3).prop_map(Expr::Or),
            ]
        })
    }

    proptest! {
        /// Truth only depends on the order type: re-spacing the values of an
        /// assignment never changes the verdict, and matches the
        /// ordered-set-partition evaluation.
        #[test]
        fn cone_invariance(
            expr in arb_expr(5),
            values in proptest::collection::vec(0i64..5, 5),
            gaps in proptest::collection::vec(1i64..4, 5),
        ) {
            let s = SchedulingFormula::new(5, expr);
            let osp = OrderedSetPartition::from_assignment(&values);
            // Build a second assignment with the same order type but
            // different spacing: block b gets value sum(gaps[..=b]).
            let pos = osp.positions();
            let mut level = vec![0i64; osp.block_count()];
            let mut acc = 0;
            for (b, level_slot) in level.iter_mut().enumerate() {
                acc += gaps[b % gaps.len()];
                *level_slot = acc;
            }
            let respaced: Vec<i64> = (0..5).map(|i| level[pos[i]]).collect();
            prop_assert_eq!(
                s.eval_on_assignment(&values),
                s.eval_on_assignment(&respaced)
            );
            prop_assert_eq!(
                s.eval_on_assignment(&values),
                s.eval_on_ordered_partition(&osp)
            );
        }

        /// The f-basis count equals the literal count of satisfying maps.
        #[test]
        fn schedule_count_equals_map_count(expr in arb_expr(4), k in 0u64..=4) {
            let s = SchedulingFormula::new(4, expr);
            let mut direct = 0i128;
            let mut assignment = [0i64; 4];
            count_maps(&s, k as i64, 0, &mut assignment, &mut direct);
            let via_f = count_schedules(SchedulePredicate::Formula(&s), k, 1).unwrap();
            prop_assert_eq!(via_f, direct);
        }
    }

    fn count_maps(
        s: &SchedulingFormula,
        k: i64,
        at: usize,
        assignment: &mut [i64; 4],
        count: &mut i128,
    ) {
        if at == 4 {
            if s.eval_on_assignment(assignment) {
                *count += 1;
            }
            return;
        }
        for v in 1..=k {
            assignment[at] = v;
            count_maps(s, k, at + 1, assignment, count);
        }
    }
}
