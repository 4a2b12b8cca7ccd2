//! Axiom reports: one entry per checked law, with the first counterexample found.

use std::fmt;

use crate::tensor::{unflatten, LinMap, Scalar};

macro_rules! laws {
    ($($variant:ident => $name:literal),* $(,)?) => {
        /// Name of a checked law.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum Law {
            $($variant),*
        }

        impl Law {
            pub const ALL: &'static [Law] = &[$(Law::$variant),*];

            pub fn name(self) -> &'static str {
                match self {
                    $(Law::$variant => $name),*
                }
            }

            pub fn from_name(name: &str) -> Option<Law> {
                match name {
                    $($name => Some(Law::$variant),)*
                    _ => None,
                }
            }
        }
    };
}

laws! {
    Assoc => "assoc",
    UnitLeft => "unit_left",
    UnitRight => "unit_right",
    Tw1 => "tw1",
    Tw2 => "tw2",
    Tw3 => "tw3",
    Tw4 => "tw4",
    Brz1 => "brz1",
    Brz2 => "brz2",
    Brz3 => "brz3",
    Brz4 => "brz4",
    Brz5 => "brz5",
    Cros1 => "cros1",
    Cros2 => "cros2",
    Cros3 => "cros3",
    Cros4 => "cros4",
    Rel1 => "rel1",
    Rel2 => "rel2",
    Rel3 => "rel3",
    PhiUnital => "phi_unital",
    PhiMult => "phi_mult",
    PhiInvertible => "phi_invertible",
    // twisted-tensor-product specialization
    ThetaAlg => "theta_alg",
    GammaUnital => "gamma_unital",
    StarAlgebra => "star_algebra",
    SigmaStar => "sigma_star",
    // quasi-bialgebra, module algebra and gauge laws
    ComultMult => "comult_mult",
    CounitMult => "counit_mult",
    CounitLaws => "counit_laws",
    AssociatorInverse => "associator_inverse",
    QuasiCoassoc => "quasi_coassoc",
    AssociatorCounital => "associator_counital",
    Pentagon => "pentagon",
    ActionUnital => "action_unital",
    ActionModule => "action_module",
    ActionMult => "action_mult",
    ModuleAssoc => "module_assoc",
    GaugeInverse => "gauge_inverse",
    GaugeCounital => "gauge_counital",
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of one law.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub law: Law,
    pub passed: bool,
    /// Basis multi-index of the first violating input, in the law's domain factors.
    pub first_counterexample: Option<Vec<usize>>,
    /// Number of violating basis inputs.
    pub failures: usize,
    pub detail: String,
}

impl Check {
    pub fn pass(law: Law, detail: impl Into<String>) -> Check {
        Check {
            law,
            passed: true,
            first_counterexample: None,
            failures: 0,
            detail: detail.into(),
        }
    }

    pub fn fail(law: Law, counterexample: Vec<usize>, failures: usize, detail: impl Into<String>) -> Check {
        Check {
            law,
            passed: false,
            first_counterexample: Some(counterexample),
            failures,
            detail: detail.into(),
        }
    }

    /// Compares two maps with the same domain; the counterexample is the first domain
    /// basis multi-index (in `lhs`'s factor list) whose images differ.
    pub fn maps(law: Law, what: &str, lhs: &LinMap, rhs: &LinMap) -> Check {
        match lhs.first_difference(rhs) {
            Err(e) => Check::fail(law, vec![], 1, format!("{what}: {e}")),
            Ok(None) => Check::pass(law, what),
            Ok(Some(d)) => {
                let at = unflatten(d.column, lhs.domain_dims()).expect("column in range");
                let coord = unflatten(d.row, lhs.codomain_dims()).expect("row in range");
                Check::fail(
                    law,
                    at.clone(),
                    d.differing_columns,
                    format!(
                        "{what}: sides differ on basis input {at:?} at output coordinate {coord:?} ({} vs {})",
                        lhs.get(d.row, d.column),
                        rhs.get(d.row, d.column)
                    ),
                )
            }
        }
    }

    /// Collects a family of vector equalities indexed by basis multi-indices.
    pub fn slices<I>(law: Law, what: &str, cases: I) -> Check
    where
        I: IntoIterator<Item = (Vec<usize>, Vec<Scalar>, Vec<Scalar>)>,
    {
        let mut first: Option<(Vec<usize>, usize)> = None;
        let mut failures = 0;
        for (index, lhs, rhs) in cases {
            if let Some(pos) = lhs.iter().zip(&rhs).position(|(a, b)| a != b) {
                failures += 1;
                first.get_or_insert((index, pos));
            } else if lhs.len() != rhs.len() {
                failures += 1;
                first.get_or_insert((index, lhs.len().min(rhs.len())));
            }
        }
        match first {
            None => Check::pass(law, what),
            Some((index, pos)) => Check::fail(
                law,
                index.clone(),
                failures,
                format!("{what}: fails on basis input {index:?} at coordinate {pos}"),
            ),
        }
    }

    /// Merges two checks of the same law (both halves of a two-part condition).
    pub fn and(self, other: Check) -> Check {
        debug_assert_eq!(self.law, other.law);
        let detail = if self.passed && other.passed {
            format!("{}; {}", self.detail, other.detail)
        } else if self.passed {
            other.detail.clone()
        } else if other.passed {
            self.detail.clone()
        } else {
            format!("{}; {}", self.detail, other.detail)
        };
        Check {
            law: self.law,
            passed: self.passed && other.passed,
            first_counterexample: self.first_counterexample.or(other.first_counterexample),
            failures: self.failures + other.failures,
            detail,
        }
    }
}

/// Ordered list of checks; order is the order the laws were evaluated in.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub checks: Vec<Check>,
}

impl AxiomReport {
    pub fn new() -> AxiomReport {
        AxiomReport::default()
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: AxiomReport) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn failed_laws(&self) -> Vec<Law> {
        self.failures().map(|c| c.law).collect()
    }

    pub fn get(&self, law: Law) -> Option<&Check> {
        self.checks.iter().find(|c| c.law == law)
    }

    /// True iff `law` was checked and passed.
    pub fn law_passed(&self, law: Law) -> bool {
        self.get(law).is_some_and(|c| c.passed)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.passed { "ok  " } else { "FAIL" };
            out.push_str(&format!("{status} {:<20} {}", c.law.name(), c.detail));
            if !c.passed {
                out.push_str(&format!(" [{} failing input(s)]", c.failures));
            }
            out.push('\n');
        }
        out
    }
}

impl FromIterator<Check> for AxiomReport {
    fn from_iter<I: IntoIterator<Item = Check>>(iter: I) -> AxiomReport {
        AxiomReport {
            checks: iter.into_iter().collect(),
        }
    }
}
