use crate::qlinalg::Rational;

/// Identities checked by the verifiers in this crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    TwistsCommute,
    SkewSymmetry,
    BiHomJacobi,
    Multiplicative,
    Associativity,
    ActionAlpha,
    ActionBeta,
    ActionBracket,
    Compatibility,
    RepresentationCompatibility,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::TwistsCommute => "twists_commute",
            Axiom::SkewSymmetry => "skew_symmetry",
            Axiom::BiHomJacobi => "bihom_jacobi",
            Axiom::Multiplicative => "multiplicative",
            Axiom::Associativity => "bihom_associativity",
            Axiom::ActionAlpha => "action_alpha",
            Axiom::ActionBeta => "action_beta",
            Axiom::ActionBracket => "action_bracket",
            Axiom::Compatibility => "compatibility",
            Axiom::RepresentationCompatibility => "representation_compatibility",
        }
    }

    /// Short tag naming the identity, carried on every report line.
    pub fn reference(self) -> &'static str {
        match self {
            Axiom::TwistsCommute => "bihom-twists-commute",
            Axiom::SkewSymmetry => "bihom-skew-symmetry",
            Axiom::BiHomJacobi => "bihom-jacobi",
            Axiom::Multiplicative => "multiplicative-twists",
            Axiom::Associativity => "bihom-associativity",
            Axiom::ActionAlpha => "representation-alpha",
            Axiom::ActionBeta => "representation-beta",
            Axiom::ActionBracket => "representation-bracket",
            Axiom::Compatibility => "compatible-six-term",
            Axiom::RepresentationCompatibility => "compatible-representation",
        }
    }
}

/// A single failing instance of an identity on basis elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    /// What was being checked, e.g. `"bracket 0"`.
    pub subject: String,
    /// Basis indices at which the identity fails.
    pub indices: Vec<usize>,
    pub lhs: Vec<Rational>,
    pub rhs: Vec<Rational>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    checked: Vec<Axiom>,
    violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub(crate) fn mark_checked(&mut self, axiom: Axiom) {
        if !self.checked.contains(&axiom) {
            self.checked.push(axiom);
        }
    }

    pub(crate) fn record(
        &mut self,
        axiom: Axiom,
        subject: impl Into<String>,
        indices: Vec<usize>,
        lhs: Vec<Rational>,
        rhs: Vec<Rational>,
    ) {
        self.mark_checked(axiom);
        self.violations.push(Violation {
            axiom,
            subject: subject.into(),
            indices,
            lhs,
            rhs,
        });
    }

    /// Checks `lhs == rhs` and records a violation otherwise.
    pub(crate) fn expect_equal(
        &mut self,
        axiom: Axiom,
        subject: &str,
        indices: &[usize],
        lhs: Vec<Rational>,
        rhs: Vec<Rational>,
    ) {
        self.mark_checked(axiom);
        if lhs != rhs {
            self.record(axiom, subject, indices.to_vec(), lhs, rhs);
        }
    }

    pub fn merge(&mut self, other: AxiomReport) {
        for axiom in other.checked {
            self.mark_checked(axiom);
        }
        self.violations.extend(other.violations);
    }

    pub fn checked(&self) -> &[Axiom] {
        &self.checked
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    /// True unless some violation of `axiom` was recorded.
    pub fn ok(&self, axiom: Axiom) -> bool {
        !self.violations.iter().any(|v| v.axiom == axiom)
    }

    pub fn skew_ok(&self) -> bool {
        self.ok(Axiom::SkewSymmetry)
    }

    pub fn jacobi_ok(&self) -> bool {
        self.ok(Axiom::BiHomJacobi)
    }

    pub fn commute_ok(&self) -> bool {
        self.ok(Axiom::TwistsCommute)
    }

    pub fn multiplicative_ok(&self) -> bool {
        self.ok(Axiom::Multiplicative)
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn first_violation(&self, axiom: Axiom) -> Option<&Violation> {
        self.violations.iter().find(|v| v.axiom == axiom)
    }
}
