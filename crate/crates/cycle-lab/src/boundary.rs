use std::fmt;

use chain_algebra::{boundary, Chain, Coeff, GradedTerm, XSet};
use quandle_core::{Elem, FiniteQuandle};

use crate::error::CycleError;

/// `sign · ∂(four_term) == expected`.
pub fn verify_boundary_identity(
    four_term: &GradedTerm,
    expected: &Chain,
    sign: Coeff,
    q: &FiniteQuandle,
) -> Result<bool, CycleError> {
    Ok(identity_residual(four_term, expected, sign, q)?.is_zero())
}

/// `sign · ∂(four_term) - expected`.
pub fn identity_residual(
    four_term: &GradedTerm,
    expected: &Chain,
    sign: Coeff,
    q: &FiniteQuandle,
) -> Result<Chain, CycleError> {
    if four_term.arity() != 4 {
        return Err(CycleError::InvalidParameter(format!("{four_term} has arity {}, expected 4", four_term.arity())));
    }
    if sign.abs() != 1 {
        return Err(CycleError::InvalidParameter(format!("sign must be +1 or -1, got {sign}")));
    }
    if expected.x_set() != XSet::Graded {
        return Err(CycleError::InvalidParameter("boundary identities live over the graded X-set".into()));
    }
    let single = Chain::from_terms(4, XSet::Graded, [(four_term.clone(), sign)])?;
    Ok(boundary(&single, q)?.minus(expected)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    R7,
    O6,
}

/// One term of the expected chain. Labels name `a_i = a_0 + i s` over `R_7`
/// or the vertex itself over `O_6`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternTerm {
    pub coeff: Coeff,
    pub shift: i32,
    /// Labels acting on the base index, left to right.
    pub word: Vec<u8>,
    pub colors: [u8; 3],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryIdentity {
    pub name: String,
    pub family: Family,
    pub sign: Coeff,
    pub four: [u8; 4],
    pub expected: Vec<PatternTerm>,
}

fn pt(coeff: Coeff, shift: i32, word: &[u8], colors: [u8; 3]) -> PatternTerm {
    PatternTerm { coeff, shift, word: word.to_vec(), colors }
}

fn m7(x: i32) -> u8 {
    x.rem_euclid(7) as u8
}

impl BoundaryIdentity {
    fn new(name: impl Into<String>, family: Family, sign: Coeff, four: [u8; 4], expected: Vec<PatternTerm>) -> Self {
        BoundaryIdentity { name: name.into(), family, sign, four, expected }
    }

    pub fn quandle(&self) -> Result<FiniteQuandle, CycleError> {
        Ok(match self.family {
            Family::R7 => FiniteQuandle::dihedral(7)?,
            Family::O6 => FiniteQuandle::octahedral(),
        })
    }

    /// The 4-term and expected chain at degree `n`, base index `base` and,
    /// over `R_7`, the progression `a_0 + i s`.
    pub fn instantiate(
        &self,
        q: &FiniteQuandle,
        n: i32,
        base: Elem,
        a0: Elem,
        s: Elem,
    ) -> Result<(GradedTerm, Chain), CycleError> {
        let label = |i: u8| -> Elem {
            match self.family {
                Family::R7 => ((a0 as usize + i as usize * s as usize) % 7) as Elem,
                Family::O6 => i as Elem,
            }
        };
        let four: Vec<Elem> = self.four.iter().map(|&i| label(i)).collect();
        let four = GradedTerm::new(n, base, &four)?;
        let mut expected = Chain::zero(3, XSet::Graded);
        for t in &self.expected {
            let word: Vec<Elem> = t.word.iter().map(|&i| label(i)).collect();
            let colors: Vec<Elem> = t.colors.iter().map(|&i| label(i)).collect();
            expected.add_term(GradedTerm::new(n + t.shift, q.act(base, &word), &colors)?, t.coeff)?;
        }
        Ok((four, expected))
    }

    /// Every instance over all base indices and, for `R_7`, all progressions.
    pub fn check(&self) -> Result<IdentityReport, CycleError> {
        let q = self.quandle()?;
        let progressions: Vec<(Elem, Elem)> = match self.family {
            Family::R7 => (0..7).flat_map(|a0| (1..7).map(move |s| (a0, s))).collect(),
            Family::O6 => vec![(0, 1)],
        };
        let mut report = IdentityReport { name: self.name.clone(), instances: 0, failures: 0, first_failure: None };
        for base in q.elements() {
            for &(a0, s) in &progressions {
                let (four, expected) = self.instantiate(&q, 0, base, a0, s)?;
                report.instances += 1;
                let residual = identity_residual(&four, &expected, self.sign, &q)?;
                if !residual.is_zero() {
                    report.failures += 1;
                    report.first_failure.get_or_insert((four, residual));
                }
            }
        }
        Ok(report)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub name: String,
    pub instances: usize,
    pub failures: usize,
    /// The 4-term and `sign · ∂ - expected` of the first failing instance.
    pub first_failure: Option<(GradedTerm, Chain)>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "pass" } else { "FAIL" };
        write!(f, "{} {verdict}: {} instances, {} failures", self.name, self.instances, self.failures)?;
        if let Some((t, r)) = &self.first_failure {
            write!(f, "\nfirst failure at {t}: residual {r:?}")?;
        }
        Ok(())
    }
}

fn r7_p_family(p: u8) -> BoundaryIdentity {
    let (neg, two) = (m7(-(p as i32)), m7(2 - p as i32));
    BoundaryIdentity::new(
        format!("r7-3+4-p{p}"),
        Family::R7,
        -1,
        [p, 0, 1, 0],
        vec![
            pt(1, 0, &[], [0, 1, 0]),
            pt(-1, 0, &[], [p, 0, 1]),
            pt(-1, 0, &[], [p, 1, 0]),
            pt(1, 1, &[0], [neg, 1, 0]),
            pt(1, 1, &[0], [neg, 0, 6]),
            pt(-1, 1, &[1], [two, 2, 0]),
            pt(-1, 1, &[p], [0, 1, 0]),
        ],
    )
}

/// The explicit identities met in the two-degree case analyses.
pub fn catalogue() -> Vec<BoundaryIdentity> {
    let mut out = vec![
        BoundaryIdentity::new(
            "r7-2+4",
            Family::R7,
            1,
            [0, 1, 0, 1],
            vec![
                pt(1, 0, &[], [0, 1, 0]),
                pt(-1, 0, &[], [1, 0, 1]),
                pt(1, 1, &[0], [1, 0, 1]),
                pt(1, 1, &[0], [0, 6, 1]),
                pt(-1, 1, &[1], [2, 1, 2]),
                pt(-1, 1, &[1], [2, 0, 1]),
            ],
        ),
        BoundaryIdentity::new(
            "r7-3+3",
            Family::R7,
            -1,
            [6, 0, 1, 0],
            vec![
                pt(1, 0, &[], [0, 1, 0]),
                pt(-1, 0, &[], [6, 0, 1]),
                pt(-1, 0, &[], [6, 1, 0]),
                pt(1, 1, &[0], [1, 0, 6]),
                pt(-1, 1, &[1], [3, 2, 0]),
                pt(-1, 1, &[6], [0, 1, 0]),
            ],
        ),
    ];
    out.extend([2, 3, 4, 5].map(r7_p_family));
    let o6_low = |c: u8, tail: bool| {
        if tail {
            vec![pt(1, 0, &[], [0, 1, 0]), pt(-1, 0, &[], [0, 1, c]), pt(-1, 0, &[], [1, 0, c])]
        } else {
            vec![pt(1, 0, &[], [0, 1, 0]), pt(-1, 0, &[], [c, 0, 1]), pt(-1, 0, &[], [c, 1, 0])]
        }
    };
    let bigon = vec![pt(1, 0, &[], [0, 1, 0]), pt(-1, 0, &[], [1, 0, 1])];
    let with = |mut low: Vec<PatternTerm>, high: Vec<PatternTerm>| {
        low.extend(high);
        low
    };
    out.extend([
        BoundaryIdentity::new(
            "o6-2+4-i",
            Family::O6,
            1,
            [0, 1, 0, 1],
            with(
                bigon.clone(),
                vec![
                    pt(1, 1, &[0], [0, 2, 1]),
                    pt(1, 1, &[0], [1, 0, 1]),
                    pt(-1, 1, &[1], [5, 0, 1]),
                    pt(-1, 1, &[1], [5, 1, 5]),
                ],
            ),
        ),
        BoundaryIdentity::new(
            "o6-2+4-ii",
            Family::O6,
            -1,
            [1, 0, 1, 0],
            with(
                bigon,
                vec![
                    pt(1, 1, &[0], [2, 1, 0]),
                    pt(1, 1, &[0], [2, 0, 2]),
                    pt(-1, 1, &[1], [1, 5, 0]),
                    pt(-1, 1, &[1], [0, 1, 0]),
                ],
            ),
        ),
        BoundaryIdentity::new(
            "o6-3+3-i",
            Family::O6,
            -1,
            [5, 0, 1, 0],
            with(
                o6_low(5, false),
                vec![pt(1, 1, &[0], [1, 0, 2]), pt(-1, 1, &[1], [3, 5, 0]), pt(-1, 1, &[5], [0, 1, 0])],
            ),
        ),
        BoundaryIdentity::new(
            "o6-3+3-ii",
            Family::O6,
            1,
            [0, 1, 0, 2],
            with(
                o6_low(2, true),
                vec![pt(1, 1, &[0], [1, 0, 2]), pt(-1, 1, &[1], [5, 0, 2]), pt(-1, 1, &[2], [1, 3, 1])],
            ),
        ),
    ]);
    out
}

/// The `R_7` 2+4 chain with `a_4` where `a_6` belongs; kept to show the
/// printed variant is not a boundary.
pub fn r7_two_four_with_a4() -> BoundaryIdentity {
    let mut id = catalogue().remove(0);
    id.name = "r7-2+4-with-a4".into();
    id.expected[3].colors = [0, 4, 1];
    id
}
