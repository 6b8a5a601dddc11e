use std::str::FromStr;

use bihom_core::algebra::{
    check_bihom_lie, check_morphism, check_multiplicative, check_representation, yau_twist, BiHomAlgebra,
    BracketTensor, Representation,
};
use bihom_core::cochains::{cohomology_dim, mc_check, twisted_cochain_basis, Cochain};
use bihom_core::compatible::{
    check_compatible_representation, lambda_sum_bracket, mc_pair_check, nijenhuis_bracket, nijenhuis_check, rb_check,
    rb_compatible_check, rb_induced_bracket, twisted_mc_check, CompatibleComplex, CompatiblePair, Differential, MCPair,
    RotaBaxterWeight,
};
use bihom_core::qlinalg::{format_rational, rat};
use bihom_core::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::document::{InputDocument, Operator};
use crate::error::CliError;
use crate::report::{vector, Report};

const DEFAULT_DEGREES: (usize, usize) = (0, 2);
const MC_SAMPLES: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Check,
    Compat,
    Cohomology,
    CCohomology,
    Twist,
    Nijenhuis,
    RotaBaxter,
    Mc,
    ChainMap,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Check => "check",
            Command::Compat => "compat",
            Command::Cohomology => "cohomology",
            Command::CCohomology => "ccohomology",
            Command::Twist => "twist",
            Command::Nijenhuis => "nijenhuis",
            Command::RotaBaxter => "rota-baxter",
            Command::Mc => "mc",
            Command::ChainMap => "chainmap",
        }
    }
}

impl FromStr for Command {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        Ok(match s {
            "check" => Command::Check,
            "compat" => Command::Compat,
            "cohomology" => Command::Cohomology,
            "ccohomology" => Command::CCohomology,
            "twist" => Command::Twist,
            "nijenhuis" => Command::Nijenhuis,
            "rota-baxter" => Command::RotaBaxter,
            "mc" => Command::Mc,
            "chainmap" => Command::ChainMap,
            other => return Err(CliError::Usage(format!("unknown command {other:?}"))),
        })
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Flags {
    pub bracket: Option<String>,
    pub bracket2: Option<String>,
    pub rep: Option<String>,
    pub action: Option<String>,
    pub action2: Option<String>,
    pub degrees: Option<(usize, usize)>,
    pub operator: Option<String>,
    pub operator2: Option<String>,
    pub seed: Option<u64>,
}

/// Parses `A..B` (inclusive) or a single degree `N`.
pub fn parse_degrees(text: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Usage(format!("degrees must look like A..B, got {text:?}"));
    let (lo, hi) = match text.split_once("..") {
        Some((lo, hi)) => (
            lo.trim().parse().map_err(|_| bad())?,
            hi.trim().parse().map_err(|_| bad())?,
        ),
        None => {
            let n = text.trim().parse().map_err(|_| bad())?;
            (n, n)
        }
    };
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

impl Flags {
    fn echo(&self, command: Command) -> Vec<(String, String)> {
        let mut echo = vec![("command".to_string(), command.name().to_string())];
        let named = [
            ("bracket", &self.bracket),
            ("bracket2", &self.bracket2),
            ("rep", &self.rep),
            ("action", &self.action),
            ("action2", &self.action2),
            ("operator", &self.operator),
            ("operator2", &self.operator2),
        ];
        for (key, value) in named {
            if let Some(v) = value {
                echo.push((key.to_string(), v.clone()));
            }
        }
        if let Some((lo, hi)) = self.degrees {
            echo.push(("degrees".to_string(), format!("{lo}..{hi}")));
        }
        if let Some(seed) = self.seed {
            echo.push(("seed".to_string(), seed.to_string()));
        }
        echo
    }

    fn degrees(&self) -> std::ops::RangeInclusive<usize> {
        let (lo, hi) = self.degrees.unwrap_or(DEFAULT_DEGREES);
        lo..=hi
    }
}

/// A single bracket selected from the document.
struct Single {
    name: String,
    algebra: BiHomAlgebra,
}

struct Pair {
    label: String,
    pair: CompatiblePair,
}

struct Coefficients {
    label: String,
    rep: Representation,
}

fn single(doc: &InputDocument, flags: &Flags) -> Result<Single, CliError> {
    let index = match &flags.bracket {
        Some(name) => doc.bracket_index(name)?,
        None => 0,
    };
    Ok(Single {
        name: doc.brackets[index].name.clone(),
        algebra: doc.algebra(&[index])?,
    })
}

fn pair(doc: &InputDocument, flags: &Flags) -> Result<Pair, CliError> {
    let first = match &flags.bracket {
        Some(name) => doc.bracket_index(name)?,
        None => 0,
    };
    let second = match &flags.bracket2 {
        Some(name) => doc.bracket_index(name)?,
        None => (0..doc.brackets.len())
            .find(|&i| i != first)
            .ok_or_else(|| CliError::Usage("this command needs two brackets".into()))?,
    };
    let label = format!("{}+{}", doc.brackets[first].name, doc.brackets[second].name);
    Ok(Pair {
        label,
        pair: CompatiblePair::new(doc.algebra(&[first, second])?)?,
    })
}

fn single_coefficients(doc: &InputDocument, flags: &Flags, a: &BiHomAlgebra) -> Result<Coefficients, CliError> {
    match &flags.rep {
        None => Ok(Coefficients {
            label: "adjoint".into(),
            rep: Representation::adjoint(a),
        }),
        Some(name) => {
            let r = doc.representation(name)?;
            let index = match &flags.action {
                Some(action) => r.action_index(action)?,
                None => 0,
            };
            Ok(Coefficients {
                label: format!("{}.{}", r.name, r.actions[index].name),
                rep: r.build(&[index])?,
            })
        }
    }
}

fn pair_coefficients(doc: &InputDocument, flags: &Flags, p: &CompatiblePair) -> Result<Coefficients, CliError> {
    match &flags.rep {
        None => Ok(Coefficients {
            label: "adjoint".into(),
            rep: Representation::adjoint(p.algebra()),
        }),
        Some(name) => {
            let r = doc.representation(name)?;
            let first = match &flags.action {
                Some(action) => r.action_index(action)?,
                None => 0,
            };
            let second = match &flags.action2 {
                Some(action) => r.action_index(action)?,
                None => (0..r.actions.len())
                    .find(|&i| i != first)
                    .ok_or_else(|| CliError::Usage(format!("representation {} needs a second action", r.name)))?,
            };
            Ok(Coefficients {
                label: format!("{}.{}+{}", r.name, r.actions[first].name, r.actions[second].name),
                rep: r.build(&[first, second])?,
            })
        }
    }
}

fn operator<'a>(doc: &'a InputDocument, name: &Option<String>, flag: &str) -> Result<&'a Operator, CliError> {
    match name {
        Some(name) => doc.operator(name),
        None => Err(CliError::Usage(format!("this command needs --{flag}"))),
    }
}

fn bihom_lie_report(report: &mut Report, subject: &str, a: &BiHomAlgebra) -> Result<bool, CliError> {
    let mut checks = check_bihom_lie(a, 0)?;
    checks.merge(check_multiplicative(a, 0)?);
    report.axioms(subject, &checks);
    Ok(checks.passed())
}

fn pair_report(report: &mut Report, names: [&str; 2], label: &str, p: &CompatiblePair) -> bool {
    let individual = p.brackets_report();
    let mut ok = true;
    for (which, name) in names.into_iter().enumerate() {
        let mut single = check_bihom_lie(p.algebra(), which).expect("pair has two brackets");
        single.merge(check_multiplicative(p.algebra(), which).expect("pair has two brackets"));
        report.axioms(name, &single);
        ok &= single.passed();
    }
    debug_assert_eq!(ok, individual.passed());
    report.axioms(label, p.compatibility_report());
    ok && p.is_compatible()
}

fn commutes(report: &mut Report, a: &BiHomAlgebra, op: &Operator) -> bool {
    let pass = op.matrix.commutes_with(a.alpha()) && op.matrix.commutes_with(a.beta());
    report.verdict("commutes_with_twists", &op.name, pass, "operator-commutes-twists");
    pass
}

fn bracket_values(report: &mut Report, prefix: &str, bracket: &BracketTensor) {
    let d = bracket.dim();
    for i in 0..d {
        for j in (i + 1)..d {
            report.value(format!("{prefix}[{i},{j}]"), vector(bracket.basis_bracket(i, j)));
        }
    }
}

pub fn run_command(doc: &InputDocument, command: &str, flags: &Flags) -> Result<Report, CliError> {
    let command: Command = command.parse()?;
    let mut report = Report::new(flags.echo(command));
    match command {
        Command::Check => check(doc, flags, &mut report)?,
        Command::Compat => compat(doc, flags, &mut report)?,
        Command::Cohomology => cohomology(doc, flags, &mut report)?,
        Command::CCohomology => ccohomology(doc, flags, &mut report)?,
        Command::Twist => twist(doc, flags, &mut report)?,
        Command::Nijenhuis => nijenhuis(doc, flags, &mut report)?,
        Command::RotaBaxter => rota_baxter(doc, flags, &mut report)?,
        Command::Mc => mc(doc, flags, &mut report)?,
        Command::ChainMap => chainmap(doc, flags, &mut report)?,
    }
    Ok(report)
}

fn check(doc: &InputDocument, flags: &Flags, report: &mut Report) -> Result<(), CliError> {
    let indices: Vec<usize> = match &flags.bracket {
        Some(name) => vec![doc.bracket_index(name)?],
        None => (0..doc.brackets.len()).collect(),
    };
    for index in indices {
        let name = &doc.brackets[index].name;
        let a = doc.algebra(&[index])?;
        bihom_lie_report(report, name, &a)?;
        if flags.rep.is_some() {
            let coeffs = single_coefficients(doc, flags, &a)?;
            let rep_report = check_representation(&a, &coeffs.rep, 0, 0)?;
            report.axioms(&format!("{name}/{}", coeffs.label), &rep_report);
        }
    }
    Ok(())
}

fn compat(doc: &InputDocument, flags: &Flags, report: &mut Report) -> Result<(), CliError> {
    let Pair { label, pair: p } = pair(doc, flags)?;
    let (first, second) = label.split_once('+').expect("pair labels join two names");
    let ok = pair_report(report, [first, second], &label, &p);
    if ok {
        let sum = lambda_sum_bracket(&p, &rat(1), &rat(1));
        bihom_lie_report(report, &label, &sum)?;
    }
    if p.first().is_plain_skew() && p.second().is_plain_skew() {
        let m = MCPair::from_pair(&p)?;
        let mc = mc_pair_check(&m, &Differential::Zero, &Differential::Zero, p.algebra())?;
        report.verdict("maurer_cartan_pair", &label, mc, "maurer-cartan-pair");
    } else {
        report.value("maurer_cartan_pair", "skipped:not-plain-skew");
    }
    if flags.rep.is_some() {
        let coeffs = pair_coefficients(doc, flags, &p)?;
        let rep_report = check_compatible_representation(&p, &coeffs.rep)?;
        report.axioms(&format!("{label}/{}", coeffs.label), &rep_report);
    }
    Ok(())
}

fn cohomology(doc: &InputDocument, flags: &Flags, report: &mut Report) -> Result<(), CliError> {
    let s = single(doc, flags)?;
    let coeffs = single_coefficients(doc, flags, &s.algebra)?;
    report.value("coefficients", format!("{}/{}", s.name, coeffs.label));
    for n in flags.degrees() {
        let dim = cohomology_dim(&s.algebra, &coeffs.rep, n, 0, 0)?;
        report.dimension("H", n, dim, "ce-cohomology");
    }
    Ok(())
}

/// Pair and representation checks shared by the compatible-complex
/// commands; `None` when a check failed and the complex does not exist.
fn complex(doc: &InputDocument, flags: &Flags, report: &mut Report) -> Result<Option<CompatibleComplex>, CliError> {
    let Pair { label, pair: p } = pair(doc, flags)?;
    let (first, second) = label.split_once('+').expect("pair labels join two names");
    if !pair_report(report, [first, second], &label, &p) {
        return Ok(None);
    }
    let coeffs = pair_coefficients(doc, flags, &p)?;
    let rep_report = check_compatible_representation(&p, &coeffs.rep)?;
    report.axioms(&format!("{label}/{}", coeffs.label), &rep_report);
    if !rep_report.passed() {
        return Ok(None);
    }
    report.value("coefficients", format!("{label}/{}", coeffs.label));
    Ok(Some(CompatibleComplex::new(&p, &coeffs.rep)?))
}

fn ccohomology(doc: &InputDocument, flags: &Flags, report: &mut Report) -> Result<(), CliError> {
    let Some(c) = complex(doc, flags, report)? else {
        return Ok(());
    };
    for n in flags.degrees() {
        let subject = format!("degree{n}");
        report.verdict(
            "coboundary_squares_to_zero",
            &subject,
            c.squares_to_zero(n),
            "compatible-coboundary-square",
        );
        report.verdict(
            "coboundaries_anticommute",
            &subject,
            c.anticommutes(n),
            "coboundary-anticommute",
        );
    }
    for n in flags.degrees() {
        match c.cohomology_dim(n) {
            Ok(dim) => report.dimension("Hc", n, dim, "compatible-cohomology"),
            Err(Error::NotAComplex { .. }) => {}
            Err(e) => return Err(e.into()),
        }
    }
    Ok(())
}

fn chainmap(doc: &InputDocument, flags: &Flags, report: &mut Report) -> Result<(), CliError> {
    let Some(c) = complex(doc, flags, report)? else {
        return Ok(());
    };
    for n in flags.degrees() {
        report.verdict(
            "sum_chain_map",
            &format!("degree{n}"),
            c.is_chain_map_at(n),
            "sum-chain-map",
        );
    }
    Ok(())
}

fn twist(doc: &InputDocument, flags: &Flags, report: &mut Report) -> Result<(), CliError> {
    let s = single(doc, flags)?;
    let a = operator(doc, &flags.operator, "operator")?;
    let b = operator(doc, &flags.operator2, "operator2")?;
    if !s.algebra.alpha().is_identity() || !s.algebra.beta().is_identity() {
        return Err(CliError::Usage(format!(
            "bracket {} must have identity twists to be twisted",
            s.name
        )));
    }
    let lie = bihom_lie_report(report, &s.name, &s.algebra)?;
    let mut ok = lie;
    for op in [a, b] {
        let pass = check_morphism(&op.matrix, &s.algebra, &s.algebra)?;
        report.verdict("bracket_morphism", &op.name, pass, "yau-twist-morphism");
        ok &= pass;
    }
    let pass = a.matrix.commutes_with(&b.matrix);
    report.verdict(
        "twist_maps_commute",
        &format!("{}+{}", a.name, b.name),
        pass,
        "yau-twist-morphism",
    );
    if !(ok && pass) {
        return Ok(());
    }
    let twisted = yau_twist(&s.algebra, &a.matrix, &b.matrix)?;
    let subject = format!("{}^({},{})", s.name, a.name, b.name);
    bracket_values(report, &subject, &twisted.brackets()[0]);
    bihom_lie_report(report, &subject, &twisted)?;
    Ok(())
}

fn nijenhuis(doc: &InputDocument, flags: &Flags, report: &mut Report) -> Result<(), CliError> {
    let s = single(doc, flags)?;
    let n = operator(doc, &flags.operator, "operator")?;
    if !commutes(report, &s.algebra, n) {
        return Ok(());
    }
    let pass = nijenhuis_check(&s.algebra, &n.matrix)?;
    report.verdict("nijenhuis_operator", &n.name, pass, "nijenhuis-operator");
    let deformed = nijenhuis_bracket(s.algebra.bracket(0)?, &n.matrix);
    let deformed_name = format!("{}_{}", s.name, n.name);
    bracket_values(report, &deformed_name, &deformed);
    if pass {
        let bracket = s.algebra.bracket(0)?.clone();
        let p = CompatiblePair::new(s.algebra.with_brackets(vec![bracket, deformed])?)?;
        let label = format!("{}+{deformed_name}", s.name);
        pair_report(report, [&s.name, &deformed_name], &label, &p);
    }
    Ok(())
}

fn rota_baxter(doc: &InputDocument, flags: &Flags, report: &mut Report) -> Result<(), CliError> {
    let s = single(doc, flags)?;
    let r = operator(doc, &flags.operator, "operator")?;
    let w = RotaBaxterWeight::new(r.s, r.l, r.lambda.clone());
    report.value(
        "weight",
        format!("s={},l={},lambda={}", w.s, w.l, format_rational(&w.lambda)),
    );
    let mut ops = vec![r];
    if flags.operator2.is_some() {
        ops.push(operator(doc, &flags.operator2, "operator2")?);
    }
    let mut all = true;
    let mut induced = Vec::new();
    for op in &ops {
        if !commutes(report, &s.algebra, op) {
            all = false;
            continue;
        }
        let pass = rb_check(&s.algebra, &op.matrix, &w)?;
        report.verdict("rota_baxter_operator", &op.name, pass, "rota-baxter-operator");
        let bracket = rb_induced_bracket(&s.algebra, &op.matrix, &w)?;
        let name = format!("{}_{}", s.name, op.name);
        bracket_values(report, &name, &bracket);
        if pass {
            bihom_lie_report(report, &name, &s.algebra.with_brackets(vec![bracket.clone()])?)?;
        }
        all &= pass;
        induced.push((name, bracket));
    }
    if ops.len() == 2 && all {
        let label = format!("{}+{}", ops[0].name, ops[1].name);
        let pass = rb_compatible_check(&s.algebra, &ops[0].matrix, &ops[1].matrix, &w)?;
        report.verdict("rota_baxter_compatible", &label, pass, "rota-baxter-compatible");
        if pass {
            let (second, first) = (induced.pop().unwrap(), induced.pop().unwrap());
            let p = CompatiblePair::new(s.algebra.with_brackets(vec![first.1, second.1])?)?;
            report.axioms(&format!("{}+{}", first.0, second.0), p.compatibility_report());
        }
    }
    Ok(())
}

fn mc(doc: &InputDocument, flags: &Flags, report: &mut Report) -> Result<(), CliError> {
    let s = single(doc, flags)?;
    let checks = check_bihom_lie(&s.algebra, 0)?;
    report.axioms(&s.name, &checks);
    match mc_check(&s.algebra, 0) {
        Ok(pass) => report.verdict("maurer_cartan", &s.name, pass, "maurer-cartan"),
        Err(Error::NotSkew) => {
            report.verdict("maurer_cartan", &s.name, false, "maurer-cartan");
            report.value("maurer_cartan", "not-plain-skew");
            return Ok(());
        }
        Err(e) => return Err(e.into()),
    }
    let base = if flags.bracket2.is_some() {
        let Pair { label, pair: p } = pair(doc, flags)?;
        if !(p.first().is_plain_skew() && p.second().is_plain_skew()) {
            report.verdict("maurer_cartan_pair", &label, false, "maurer-cartan-pair");
            report.value("maurer_cartan_pair", "not-plain-skew");
            return Ok(());
        }
        let m = MCPair::from_pair(&p)?;
        let pass = mc_pair_check(&m, &Differential::Zero, &Differential::Zero, p.algebra())?;
        report.verdict("maurer_cartan_pair", &label, pass, "maurer-cartan-pair");
        report.verdict("compatible_pair", &label, p.is_compatible(), "compatible-six-term");
        if !pass {
            return Ok(());
        }
        m
    } else {
        if !mc_check(&s.algebra, 0)? {
            return Ok(());
        }
        let d = s.algebra.dim();
        MCPair::new(
            Cochain::from_bracket(s.algebra.bracket(0)?)?,
            Cochain::zero(2, d, d),
            &s.algebra,
        )?
    };
    if let Some(seed) = flags.seed {
        let a = &s.algebra;
        let space = twisted_cochain_basis(a.alpha(), a.beta(), a.alpha(), a.beta(), 2);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut random = || {
            space.basis().iter().fold(Cochain::zero(2, a.dim(), a.dim()), |acc, b| {
                acc.add(&b.scale(&rat(rng.gen_range(-1..=1))))
            })
        };
        let mut agree = 0;
        for _ in 0..MC_SAMPLES {
            let inc = MCPair::new(random(), random(), a)?;
            if twisted_mc_check(&base, &inc, a)?.agree() {
                agree += 1;
            }
        }
        report.value("twisted_samples", format!("{agree}/{MC_SAMPLES}"));
        report.verdict(
            "twisted_maurer_cartan",
            "samples",
            agree == MC_SAMPLES,
            "twisted-maurer-cartan",
        );
    }
    Ok(())
}
