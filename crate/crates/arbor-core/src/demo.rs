//! Scripted demonstrations: each reproduces a family of known values end
//! to end and reports one line per claim.

use crate::arboricity::arboricity_polynomial;
use crate::matroid::Matroid;
use crate::polynomial::{falling_factorial, stirling2, IntPolynomial};
use crate::scheduling::{chromatic_instance, scheduling_polynomial, SchedulePredicate};
use crate::subset::Subset;
use std::fmt;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ClaimStatus {
    Pass,
    Fail,
    Note,
}

/// One line of a report: a checked claim (`Pass`/`Fail`, exact equality of
/// the rendered values) or an informational `Note`.
#[derive(Clone, Debug)]
pub struct Claim {
    pub status: ClaimStatus,
    pub description: String,
    pub expected: String,
    pub computed: String,
}

#[derive(Clone, Debug)]
pub struct DemoReport {
    pub name: &'static str,
    pub claims: Vec<Claim>,
}

impl DemoReport {
    fn new(name: &'static str) -> DemoReport {
        DemoReport {
            name,
            claims: Vec::new(),
        }
    }

    /// Claim with a known reference value.
    fn reference<E: fmt::Display, C: fmt::Display>(&mut self, description: &str, expected: E, computed: C) {
        self.push("[reference] ", description, expected, computed);
    }

    /// Claim whose expected value is derived from first principles here.
    fn derived<E: fmt::Display, C: fmt::Display>(&mut self, description: &str, expected: E, computed: C) {
        self.push("[derived] ", description, expected, computed);
    }

    fn push<E: fmt::Display, C: fmt::Display>(
        &mut self,
        tag: &str,
        description: &str,
        expected: E,
        computed: C,
    ) {
        let expected = expected.to_string();
        let computed = computed.to_string();
        let status = if expected == computed {
            ClaimStatus::Pass
        } else {
            ClaimStatus::Fail
        };
        self.claims.push(Claim {
            status,
            description: format!("{tag}{description}"),
            expected,
            computed,
        });
    }

    fn note<E: fmt::Display, C: fmt::Display>(&mut self, description: &str, displayed: E, derived: C) {
        self.claims.push(Claim {
            status: ClaimStatus::Note,
            description: description.to_string(),
            expected: displayed.to_string(),
            computed: derived.to_string(),
        });
    }

    pub fn passed(&self) -> bool {
        self.claims.iter().all(|c| c.status != ClaimStatus::Fail)
    }

    pub fn render(&self) -> String {
        let mut out = format!("demo {}\n", self.name);
        for claim in &self.claims {
            let status = match claim.status {
                ClaimStatus::Pass => "PASS",
                ClaimStatus::Fail => "FAIL",
                ClaimStatus::Note => "NOTE",
            };
            out.push_str(&format!(
                "{status} {}: expected {} computed {}\n",
                claim.description, claim.expected, claim.computed
            ));
        }
        out
    }
}

fn monomial_minus_k(n: usize) -> IntPolynomial {
    IntPolynomial::monomial(1, n)
        .sub(&IntPolynomial::monomial(1, 1))
        .expect("small subtraction cannot overflow")
}

/// Cycle matroids: the cover polynomial of `C_n` is `k^n - k`, both by
/// direct enumeration and through the Stirling-number expansion.
pub fn demo_cycles(n_max: usize) -> DemoReport {
    assert!((3..=12).contains(&n_max), "cycle demo supports 3 <= n <= 12");
    let mut report = DemoReport::new("cycles");
    for n in 3..=n_max {
        let poly = arboricity_polynomial(&Matroid::cycle(n)).unwrap();
        report.reference(
            &format!("cover polynomial of C_{n}"),
            monomial_minus_k(n),
            &poly,
        );
        // Blocks are any proper subsets, so: sum over m >= 2 of S(n,m)*(k)_m.
        let mut stirling_form = IntPolynomial::zero();
        for m in 2..=n {
            let term = falling_factorial(m).unwrap().scale(stirling2(n, m)).unwrap();
            stirling_form = stirling_form.add(&term).unwrap();
        }
        report.reference(
            &format!("Stirling expansion for C_{n}"),
            &poly,
            stirling_form,
        );
    }
    let c3 = arboricity_polynomial(&Matroid::cycle(3)).unwrap();
    for (k, expected) in [(1, 0), (2, 6), (3, 24)] {
        report.reference(
            &format!("C_3 covers with at most {k} parts"),
            expected,
            c3.eval(k).unwrap(),
        );
    }
    if n_max >= 4 {
        let c4 = arboricity_polynomial(&Matroid::cycle(4)).unwrap();
        report.reference("C_4 covers with at most 3 parts", 78, c4.eval(3).unwrap());
    }
    report
}

/// Deletion/contraction: the cover polynomial of a cycle never equals the
/// sum or difference of its minors' polynomials, so no such recursion can
/// compute it.
pub fn demo_condel(n: usize) -> DemoReport {
    assert!((3..=10).contains(&n), "deletion/contraction demo supports 3 <= n <= 10");
    let mut report = DemoReport::new("condel");
    let cycle = Matroid::cycle(n);
    let poly = arboricity_polynomial(&cycle).unwrap();
    let del = arboricity_polynomial(&cycle.deleted(0)).unwrap();
    let con = arboricity_polynomial(&cycle.contracted(0)).unwrap();

    report.reference(&format!("cover polynomial of C_{n}"), monomial_minus_k(n), &poly);
    report.derived(
        &format!("deleting an edge of C_{n} leaves a free matroid on {} elements", n - 1),
        IntPolynomial::monomial(1, n - 1),
        &del,
    );
    report.derived(
        &format!("contracting an edge of C_{n} leaves C_{}", n - 1),
        monomial_minus_k(n - 1),
        &con,
    );
    if n == 3 {
        for (k, d, c) in [(1, 1, 0), (2, 4, 2), (3, 9, 6)] {
            report.reference(
                &format!("2-edge path covers with at most {k} parts"),
                d,
                del.eval(k).unwrap(),
            );
            report.reference(
                &format!("double-edge covers with at most {k} parts"),
                c,
                con.eval(k).unwrap(),
            );
        }
    }
    if n == 4 {
        report.note(
            "deletion evaluation at k=3 is displayed elsewhere with the contraction's value",
            "24 (displayed)",
            format!("{} (derived)", del.eval(3).unwrap()),
        );
        report.note(
            "contraction evaluation at k=3 is displayed elsewhere with the deletion's value",
            "27 (displayed)",
            format!("{} (derived)", con.eval(3).unwrap()),
        );
    }
    report.note(
        "the deletion closed form is displayed elsewhere with degree n",
        format!("k^{n} (displayed)"),
        format!("{del} (derived: the minor has {} elements)", n - 1),
    );

    let sum = del.add(&con).unwrap();
    let diff = del.sub(&con).unwrap();
    report.derived(
        &format!("C_{n}: polynomial differs from deletion + contraction"),
        "different",
        if poly != sum { "different" } else { "equal" },
    );
    report.derived(
        &format!("C_{n}: polynomial differs from deletion - contraction"),
        "different",
        if poly != diff { "different" } else { "equal" },
    );
    report
}

/// The three explicit matroids of the octahedron decomposition, in the
/// 1-based element labels their basis lists are usually written in.
pub fn valuativity_matroids() -> (Matroid, Matroid, Matroid) {
    let pairs = |list: &[[usize; 2]]| -> Vec<Subset> {
        list.iter().map(|p| Subset::from_elements(4, p)).collect()
    };
    let whole = Matroid::uniform(2, 4);
    // 1-based {12,13,14,23,24} and {13,14,23,24}.
    let pyramid =
        Matroid::from_bases(4, pairs(&[[0, 1], [0, 2], [0, 3], [1, 2], [1, 3]])).unwrap();
    let slice = Matroid::from_bases(4, pairs(&[[0, 2], [0, 3], [1, 2], [1, 3]])).unwrap();
    (whole, pyramid, slice)
}

/// Valuativity counterexample: the octahedron decomposes into two pyramids
/// and a middle slice, but the alternating sum of their cover polynomials
/// misses the whole matroid's polynomial.
pub fn demo_valuativity() -> DemoReport {
    let mut report = DemoReport::new("valuativity");
    let (whole, pyramid, slice) = valuativity_matroids();
    let p_whole = arboricity_polynomial(&whole).unwrap();
    let p_pyramid = arboricity_polynomial(&pyramid).unwrap();
    let p_slice = arboricity_polynomial(&slice).unwrap();

    report.reference(
        "rank-2 uniform matroid on elements 1..4",
        "k^4 - 4k^2 + 3k",
        &p_whole,
    );
    report.reference(
        "pyramid piece, bases {12,13,14,23,24}",
        "k^4 - k^3 - 2k^2 + 2k",
        &p_pyramid,
    );
    report.reference(
        "middle slice, bases {13,14,23,24}",
        "k^4 - 2k^3 + k^2",
        &p_slice,
    );
    report.reference(
        "middle slice equals (k^2 - k)^2",
        {
            let sq = IntPolynomial::from_coeffs(vec![0, -1, 1]);
            sq.mul(&sq).unwrap()
        },
        &p_slice,
    );

    let combo = p_pyramid.scale(2).unwrap().sub(&p_slice).unwrap();
    report.reference("2*(pyramid) - (slice)", "k^4 - 5k^2 + 4k", &combo);
    report.reference(
        "decomposition sum differs from the whole",
        "different",
        if combo != p_whole { "different" } else { "equal" },
    );
    report.derived(
        "difference (2*pyramid - slice) - whole",
        "-k^2 + k",
        combo.sub(&p_whole).unwrap(),
    );

    // The slice is two 2-element rank-1 blocks summed: same rank function.
    let two_blocks = Matroid::uniform(1, 2).direct_sum(&Matroid::uniform(1, 2));
    let agree = (0..16u64).all(|bits| {
        let s = Subset::from_bits(bits, 4);
        slice.rank(&s) == two_blocks.rank(&s)
    });
    report.reference(
        "middle slice has the rank function of U_{1,2} + U_{1,2}",
        "agree on all 16 subsets",
        if agree { "agree on all 16 subsets" } else { "disagree" },
    );
    report
}

/// Coloring vs covering: the chromatic polynomial of the triangle satisfies
/// deletion-contraction while the cover polynomial of the same triangle
/// does not — both are scheduling polynomials.
pub fn demo_chromatic_contrast() -> DemoReport {
    let mut report = DemoReport::new("chromatic");
    let triangle = chromatic_instance(3, &[(0, 1), (0, 2), (1, 2)]);
    let chi = scheduling_polynomial(SchedulePredicate::Formula(&triangle), 1).unwrap();
    report.derived("chromatic polynomial of the triangle", "k^3 - 3k^2 + 2k", &chi);
    report.derived("triangle 2-colorings", 0, chi.eval(2).unwrap());
    report.derived("triangle 3-colorings", 6, chi.eval(3).unwrap());

    // Delete edge {1,2}: a path; contract it: a doubled edge.
    let path = chromatic_instance(3, &[(0, 1), (0, 2)]);
    let chi_del = scheduling_polynomial(SchedulePredicate::Formula(&path), 1).unwrap();
    let doubled = chromatic_instance(2, &[(0, 1), (0, 1)]);
    let chi_con = scheduling_polynomial(SchedulePredicate::Formula(&doubled), 1).unwrap();
    report.derived("chromatic polynomial of the 3-vertex path", "k^3 - 2k^2 + k", &chi_del);
    report.derived("chromatic polynomial of the doubled edge", "k^2 - k", &chi_con);
    report.derived(
        "chromatic deletion-contraction identity on the triangle",
        &chi,
        chi_del.sub(&chi_con).unwrap(),
    );

    let empty = chromatic_instance(4, &[]);
    report.derived(
        "chromatic polynomial of the empty graph on 4 vertices",
        "k^4",
        scheduling_polynomial(SchedulePredicate::Formula(&empty), 1).unwrap(),
    );

    // Cover-polynomial side: the same identity fails on the triangle.
    let condel = demo_condel(3);
    for claim in condel.claims {
        if claim.description.contains("differs from") {
            report.claims.push(claim);
        }
    }
    report
}
