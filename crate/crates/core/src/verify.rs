//! Seeded verification suites. Each suite draws random umbrae from a
//! [`UmbraSampler`] and checks a group of identities exactly, comparing two
//! independent computations of the same quantity. The first counterexample of
//! each identity is kept for the report.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact_numbers::{binomial_int, factorial, frac, int, to_exact_string, Rational};
use crate::families::{self, FamilyKind, MasterParams, YParam};
use crate::polynomial::{BiPoly, Polynomial};
use crate::random::UmbraSampler;
use crate::sheffer::{
    abel_representation, ftra_umbral, identity_matrix, matrix_product, sheffer_sequence,
    sheffer_sequence_via_gf, Flavor, RiordanArray, UmbraPair,
};
use crate::umbra::Umbra;
use crate::umbral_poly::{abel, Alphabet, UmbralPolynomial, Var};

/// Largest accepted order.
pub const MAX_ORDER: usize = 16;
/// Order used when none is given.
pub const DEFAULT_ORDER: usize = 12;
/// Random triples for the Abel identity and pairs for the inversion formula.
pub const ABEL_SAMPLES: usize = 25;
/// Random umbrae or pairs for the polynomial identities and array checks.
pub const POLY_SAMPLES: usize = 10;
/// Degree bound for the bivariate and derivative identities.
pub const POLY_DEGREE: usize = 8;
/// Degree bound for the polynomial form of the Abel identity.
pub const GENERAL_DEGREE: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Abel,
    Lif,
    Duality,
    Sheffer,
    RiordanGroup,
    Families,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] = [
        Suite::Abel,
        Suite::Lif,
        Suite::Duality,
        Suite::Sheffer,
        Suite::RiordanGroup,
        Suite::Families,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Abel => "abel",
            Suite::Lif => "lif",
            Suite::Duality => "duality",
            Suite::Sheffer => "sheffer",
            Suite::RiordanGroup => "riordan-group",
            Suite::Families => "families",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown suite `{s}`")))
    }
}

/// Inputs and both sides of the first failing instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub inputs: String,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of one identity over all its instances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub suite: Suite,
    pub name: &'static str,
    pub instances: usize,
    pub failure: Option<Counterexample>,
}

impl Check {
    fn new(suite: Suite, name: &'static str) -> Self {
        Self {
            suite,
            name,
            instances: 0,
            failure: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    /// Counts one instance; records it if the sides differ or either errs.
    fn compare<T: PartialEq + fmt::Display>(
        &mut self,
        inputs: impl FnOnce() -> String,
        lhs: Result<T>,
        rhs: Result<T>,
    ) {
        self.instances += 1;
        if self.failure.is_some() {
            return;
        }
        let show = |side: &Result<T>| match side {
            Ok(v) => v.to_string(),
            Err(e) => format!("error: {e}"),
        };
        let agree = matches!((&lhs, &rhs), (Ok(l), Ok(r)) if l == r);
        if !agree {
            self.failure = Some(Counterexample {
                inputs: inputs(),
                lhs: show(&lhs),
                rhs: show(&rhs),
            });
        }
    }

    fn holds(&mut self, inputs: impl FnOnce() -> String, condition: Result<bool>) {
        self.compare(inputs, condition, Ok(true));
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub suite: Suite,
    pub order: usize,
    pub seed: u64,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "verify {} (order {}, seed {})", self.suite, self.order, self.seed)?;
        let width = self
            .checks
            .iter()
            .map(|c| c.suite.name().len() + c.name.len() + 1)
            .max()
            .unwrap_or(0);
        for check in &self.checks {
            let label = format!("{}/{}", check.suite, check.name);
            let status = if check.passed() { "PASS" } else { "FAIL" };
            writeln!(f, "{status}  {label:width$}  {} instances", check.instances)?;
            if let Some(cx) = &check.failure {
                writeln!(f, "      inputs: {}", cx.inputs)?;
                writeln!(f, "      lhs:    {}", cx.lhs)?;
                writeln!(f, "      rhs:    {}", cx.rhs)?;
            }
        }
        let failed = self.checks.iter().filter(|c| !c.passed()).count();
        if failed == 0 {
            write!(f, "all {} identities hold", self.checks.len())
        } else {
            write!(f, "{failed} of {} identities failed", self.checks.len())
        }
    }
}

/// Runs a suite (or all of them) at the given order with the given seed.
pub fn run(suite: Suite, order: usize, seed: u64) -> Result<Report> {
    if order > MAX_ORDER {
        return Err(Error::InvalidParameter(format!(
            "order {order} exceeds the ceiling {MAX_ORDER}"
        )));
    }
    let suites: Vec<Suite> = match suite {
        Suite::All => Suite::EACH.to_vec(),
        s => vec![s],
    };
    let mut checks = Vec::new();
    for s in suites {
        checks.extend(match s {
            Suite::Abel => abel_suite(order, seed),
            Suite::Lif => lif_suite(order, seed),
            Suite::Duality => duality_suite(order, seed),
            Suite::Sheffer => sheffer_suite(order, seed),
            Suite::RiordanGroup => riordan_suite(order, seed),
            Suite::Families => families_suite(order, seed),
            Suite::All => unreachable!("expanded above"),
        });
    }
    Ok(Report {
        suite,
        order,
        seed,
        checks,
    })
}

/// Matrix wrapper giving row-by-row display and exact equality.
#[derive(PartialEq)]
struct Rows(Vec<Vec<Rational>>);

impl fmt::Display for Rows {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .0
            .iter()
            .map(|r| r.iter().map(to_exact_string).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

/// Polynomial sequence wrapper.
#[derive(PartialEq)]
struct Seq(Vec<Polynomial>);

impl fmt::Display for Seq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(Polynomial::to_string).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

fn pair_text(pair: &UmbraPair) -> String {
    format!("gamma={} alpha={}", pair.gamma(), pair.alpha())
}

fn random_pair(sampler: &mut UmbraSampler, order: usize) -> UmbraPair {
    UmbraPair::new(sampler.umbra(order), sampler.umbra(order)).expect("same order")
}

// ---------------------------------------------------------------- abel

fn abel_suite(order: usize, seed: u64) -> Vec<Check> {
    let suite = Suite::Abel;
    let mut sampler = UmbraSampler::new(seed);
    let mut identity = Check::new(suite, "umbral-abel-identity");
    let mut general = Check::new(suite, "abel-identity-polynomial-form");
    for _ in 0..ABEL_SAMPLES {
        let (alpha, gamma, delta) = (
            sampler.umbra(order),
            sampler.umbra(order),
            sampler.umbra(order),
        );
        let side = AbelSides::new(&alpha, &gamma, &delta);
        let inputs = || format!("alpha={alpha} gamma={gamma} delta={delta}");
        for n in 0..=order {
            let q = Polynomial::monomial(int(1), n);
            identity.compare(|| format!("{} n={n}", inputs()), side.lhs(&q), side.rhs(&q));
        }
        for j in 0..=GENERAL_DEGREE.min(order) {
            let q = Polynomial::monomial(int(1), j);
            general.compare(|| format!("{} q=x^{j}", inputs()), side.lhs(&q), side.rhs(&q));
        }
        let q = sampler.polynomial(GENERAL_DEGREE.min(order));
        general.compare(|| format!("{} q={q}", inputs()), side.lhs(&q), side.rhs(&q));
    }

    let mut derivative_x = Check::new(suite, "abel-derivative-in-x");
    let mut derivative_umbral = Check::new(suite, "abel-derivative-umbral");
    let mut binomial = Check::new(suite, "abel-binomial-identity");
    let degree = POLY_DEGREE.min(order);
    for _ in 0..POLY_SAMPLES {
        let alpha = sampler.umbra(order);
        let gamma = sampler.umbra(order);
        for n in 1..=degree {
            let (l, r) = abel_derivative_x(n, &alpha);
            derivative_x.compare(|| format!("alpha={alpha} n={n}"), l, r);
            let (l, r) = abel_derivative_umbral(n, &gamma, &alpha);
            derivative_umbral.compare(|| format!("alpha={alpha} gamma={gamma} n={n}"), l, r);
        }
        for n in 0..=degree {
            let (l, r) = abel_binomial(n, &alpha);
            binomial.compare(|| format!("alpha={alpha} n={n}"), l, r);
        }
    }
    vec![identity, general, derivative_x, derivative_umbral, binomial]
}

/// The two sides of `E[q(δ+γ)] = sum_k E[D^k q(δ + k.α)]/k! E[γ(γ - k.α)^(k-1)]`,
/// with the multiples `k.α` and the Abel factors computed once per triple.
struct AbelSides<'a> {
    gamma: &'a Umbra,
    delta: &'a Umbra,
    multiples: Vec<Umbra>,
    abel_factors: Vec<Result<Rational>>,
}

impl<'a> AbelSides<'a> {
    fn new(alpha: &Umbra, gamma: &'a Umbra, delta: &'a Umbra) -> Self {
        let order = alpha.order();
        let negative = alpha.multiples(order, true);
        let abel_factors = (0..=order)
            .map(|k| {
                if k == 0 {
                    return Ok(Rational::one());
                }
                let mut alphabet = Alphabet::new();
                let g = alphabet.fresh_poly(gamma.clone());
                let shifted = g.clone() + alphabet.fresh_poly(negative[k].clone());
                alphabet.evaluate_scalar(&(g * shifted.pow(k - 1)))
            })
            .collect();
        Self {
            gamma,
            delta,
            multiples: alpha.multiples(order, false),
            abel_factors,
        }
    }

    fn lhs(&self, q: &Polynomial) -> Result<Rational> {
        let mut alphabet = Alphabet::new();
        let sum = alphabet.fresh_poly(self.delta.clone()) + alphabet.fresh_poly(self.gamma.clone());
        alphabet.evaluate_scalar(&q.substitute(&sum))
    }

    fn rhs(&self, q: &Polynomial) -> Result<Rational> {
        let mut total = Rational::zero();
        let mut dq = q.clone();
        for k in 0..=q.degree().unwrap_or(0) {
            let mut alphabet = Alphabet::new();
            let shifted = alphabet.fresh_poly(self.delta.clone()) + alphabet.fresh_poly(self.multiples[k].clone());
            let first = alphabet.evaluate_scalar(&dq.substitute(&shifted))?;
            let second = self.abel_factors[k].clone()?;
            total += first * second / factorial(k);
            dq = dq.derivative();
        }
        Ok(total)
    }
}

/// `D_x E[x(x + n.α)^(n-1)]` against `n E[a_(n-1)(x + α', α)]`.
fn abel_derivative_x(n: usize, alpha: &Umbra) -> (Result<Polynomial>, Result<Polynomial>) {
    let lhs = (|| {
        let mut alphabet = Alphabet::new();
        let p = alphabet.abel_polynomial(n, &UmbralPolynomial::x(), alpha)?;
        alphabet.evaluate_x(&p.formal_derivative(Var::X))
    })();
    let rhs = (|| {
        let mut alphabet = Alphabet::new();
        let shifted = UmbralPolynomial::x() + alphabet.fresh_poly(alpha.clone());
        let p = alphabet.abel_polynomial(n - 1, &shifted, alpha)?;
        Ok(alphabet.evaluate_x(&p)?.scale(&int(n as i64)))
    })();
    (lhs, rhs)
}

/// The same derivative identity with `γ` a symbol bound to an umbra.
fn abel_derivative_umbral(n: usize, gamma: &Umbra, alpha: &Umbra) -> (Result<Rational>, Result<Rational>) {
    let lhs = (|| {
        let mut alphabet = Alphabet::new();
        let g = alphabet.fresh(gamma.clone());
        let p = alphabet.abel_polynomial(n, &UmbralPolynomial::symbol(&g), alpha)?;
        alphabet.evaluate_scalar(&p.formal_derivative(Var::Sym(g.id)))
    })();
    let rhs = (|| {
        let mut alphabet = Alphabet::new();
        let shifted = alphabet.fresh_poly(gamma.clone()) + alphabet.fresh_poly(alpha.clone());
        let p = alphabet.abel_polynomial(n - 1, &shifted, alpha)?;
        Ok(alphabet.evaluate_scalar(&p)? * int(n as i64))
    })();
    (lhs, rhs)
}

/// `a_n(x+y, α)` against `sum_k C(n,k) a_k(x, α) a_(n-k)(y, α')`.
fn abel_binomial(n: usize, alpha: &Umbra) -> (Result<BiPoly>, Result<BiPoly>) {
    let lhs = (|| {
        let mut alphabet = Alphabet::new();
        let p = alphabet.abel_polynomial(n, &(UmbralPolynomial::x() + UmbralPolynomial::y()), alpha)?;
        alphabet.evaluate(&p)
    })();
    let rhs = (|| {
        let mut sum = BiPoly::zero();
        for k in 0..=n {
            let term = BiPoly::from_x(&abel(k, alpha)?) * BiPoly::from_y(&abel(n - k, alpha)?);
            sum = sum + term.scale(&binomial_int(n, k));
        }
        Ok(sum)
    })();
    (lhs, rhs)
}

// ---------------------------------------------------------------- lif

fn lif_suite(order: usize, seed: u64) -> Vec<Check> {
    let suite = Suite::Lif;
    let mut sampler = UmbraSampler::new(seed);
    let mut reversion = Check::new(suite, "k-umbra-equals-series-reversion");
    let mut inverse_route = Check::new(suite, "k-umbra-equals-composition-with-inverse");
    for _ in 0..ABEL_SAMPLES {
        let g = sampler.umbra(order);
        let u = sampler.umbra(order);
        let inputs = || format!("gamma={g} alpha={u}");
        reversion.compare(inputs, g.k_umbra(&u), g.k_umbra_via_reversion(&u));
        // γ.β.(α_∂)^<-1>
        let via_inverse = u
            .derivative_umbra()
            .inverse_umbra()
            .and_then(|inv| Umbra::bell(order).dot(&inv))
            .and_then(|b| g.dot(&b));
        inverse_route.compare(inputs, g.k_umbra(&u), via_inverse);
    }
    let mut derivative = Check::new(suite, "derivative-umbra-from-k-umbra");
    for _ in 0..ABEL_SAMPLES {
        let u = sampler.umbra(order);
        let rhs = u
            .k_umbra(&u)
            .map(|k| k.dot_scalar(&int(-1)).derivative_umbra())
            .and_then(|d| d.inverse_umbra());
        derivative.compare(|| format!("alpha={u}"), Ok(u.derivative_umbra()), rhs);
    }
    vec![reversion, inverse_route, derivative]
}

// ---------------------------------------------------------------- duality

/// Bell numbers from the Bell triangle.
fn bell_triangle(order: usize) -> Vec<Rational> {
    let mut out = vec![int(1)];
    let mut row = vec![int(1)];
    for _ in 0..order {
        let mut next = vec![row.last().expect("nonempty").clone()];
        for v in &row {
            let last = next.last().expect("nonempty").clone();
            next.push(last + v);
        }
        out.push(next[0].clone());
        row = next;
    }
    out
}

fn duality_suite(order: usize, seed: u64) -> Vec<Check> {
    let suite = Suite::Duality;
    let chi = Umbra::singleton(order);
    let bell = Umbra::bell(order);
    let one = Umbra::scalar(&int(1), order);
    let mut duality = Check::new(suite, "chi-dot-bell-equals-bell-dot-chi-equals-one");
    duality.compare(|| "chi.bell".into(), chi.dot(&bell), Ok(one.clone()));
    duality.compare(|| "bell.chi".into(), bell.dot(&chi), Ok(one.clone()));

    let mut bell_moments = Check::new(suite, "bell-moments");
    bell_moments.compare(
        || format!("order={order}"),
        Ok(bell.clone()),
        Umbra::from_moments(bell_triangle(order)),
    );

    let mut sampler = UmbraSampler::new(seed);
    let mut nested = Check::new(suite, "dot-scalar-nesting");
    let mut cancel = Check::new(suite, "k-dot-plus-minus-k-dot-cancels");
    let mut composition = Check::new(suite, "composition-umbra-routes");
    let mut dot_bell = Check::new(suite, "dot-with-bell-composes-series");
    for _ in 0..POLY_SAMPLES {
        let u = sampler.umbra(order);
        let g = sampler.umbra(order);
        let a = frac(sampler.below(7) as i64 - 3, sampler.below(3) as i64 + 1);
        let b = frac(sampler.below(7) as i64 - 3, sampler.below(3) as i64 + 1);
        let k = int(sampler.below(5) as i64 + 1);
        let inputs = || format!("u={u} a={a} b={b}");
        nested.compare(inputs, Ok(u.dot_scalar(&b).dot_scalar(&a)), Ok(u.dot_scalar(&(&a * &b))));
        cancel.compare(
            || format!("u={u} k={k}"),
            u.dot_scalar(&k).add(&u.dot_scalar(&-k.clone())),
            Ok(Umbra::augmentation(order)),
        );
        composition.compare(
            || format!("gamma={g} alpha={u}"),
            g.composition_umbra(&u),
            g.composition_umbra_via_series(&u),
        );
        // γ.β.α has gf f_γ(f_α - 1)
        let series = u
            .gf()
            .sub(&crate::power_series::TruncatedSeries::one(order))
            .and_then(|inner| g.gf().compose(&inner))
            .and_then(|f| Umbra::from_series(&f));
        dot_bell.compare(|| format!("gamma={g} alpha={u}"), bell.dot(&u).and_then(|b| g.dot(&b)), series);
    }
    vec![duality, bell_moments, nested, cancel, composition, dot_bell]
}

// ---------------------------------------------------------------- sheffer

fn sheffer_suite(order: usize, seed: u64) -> Vec<Check> {
    let suite = Suite::Sheffer;
    let mut sampler = UmbraSampler::new(seed);
    let mut coefficients = Check::new(suite, "closed-form-coefficients-equal-gf-extraction");
    let mut gf_sequence = Check::new(suite, "sequence-equals-gf-expansion");
    let mut abel_rep = Check::new(suite, "abel-representation");
    let mut sheffer_identity = Check::new(suite, "sheffer-identity");
    let mut binomial_identity = Check::new(suite, "binomial-identity");
    let degree = POLY_DEGREE.min(order);
    for _ in 0..POLY_SAMPLES {
        let pair = random_pair(&mut sampler, order);
        let inputs = || pair_text(&pair);
        coefficients.compare(
            inputs,
            Ok(Rows(pair.coefficient_matrix())),
            Ok(Rows(pair.coefficient_matrix_via_gf())),
        );
        let seq = sheffer_sequence(&pair);
        gf_sequence.compare(inputs, Ok(Seq(seq.polys.clone())), Ok(Seq(sheffer_sequence_via_gf(&pair))));
        abel_rep.compare(
            inputs,
            Ok(Seq(seq.polys.clone())),
            abel_representation(&pair).map(|s| Seq(s.polys)),
        );

        let associated = UmbraPair::new(Umbra::augmentation(order), pair.alpha().clone()).expect("same order");
        let p = sheffer_sequence(&associated);
        let x_plus_y = BiPoly::x() + BiPoly::y();
        for n in 0..=degree {
            let convolution = |right: &[Polynomial]| {
                (0..=n).fold(BiPoly::zero(), |acc, k| {
                    acc + (BiPoly::from_x(p.get(k)) * BiPoly::from_y(&right[n - k])).scale(&binomial_int(n, k))
                })
            };
            sheffer_identity.compare(
                || format!("{} n={n}", inputs()),
                Ok(seq.get(n).substitute(&x_plus_y)),
                Ok(convolution(&seq.polys)),
            );
            binomial_identity.compare(
                || format!("alpha={} n={n}", pair.alpha()),
                Ok(p.get(n).substitute(&x_plus_y)),
                Ok(convolution(&p.polys)),
            );
        }
    }
    vec![coefficients, gf_sequence, abel_rep, sheffer_identity, binomial_identity]
}

// ---------------------------------------------------------------- riordan

/// `C(n,k)` or `(-1)^(n-k) C(n,k)`.
fn pascal_rows(order: usize, signed: bool) -> Rows {
    Rows(
        (0..=order)
            .map(|n| {
                (0..=order)
                    .map(|k| {
                        let c = binomial_int(n, k);
                        if signed && (n + k) % 2 == 1 {
                            -c
                        } else {
                            c
                        }
                    })
                    .collect()
            })
            .collect(),
    )
}

fn riordan_suite(order: usize, seed: u64) -> Vec<Check> {
    let suite = Suite::RiordanGroup;
    let pascal_pair = UmbraPair::new(Umbra::scalar(&int(1), order), Umbra::augmentation(order)).expect("same order");
    let pascal = RiordanArray::new(&pascal_pair, Flavor::Exponential);
    let mut pascal_check = Check::new(suite, "pascal-and-signed-pascal");
    pascal_check.compare(|| "(scalar(1), eps)".into(), Ok(Rows(pascal.entries().to_vec())), Ok(pascal_rows(order, false)));
    pascal_check.compare(
        || "inverse of (scalar(1), eps)".into(),
        pascal.inverse().map(|a| Rows(a.entries().to_vec())),
        Ok(pascal_rows(order, true)),
    );

    let mut sampler = UmbraSampler::new(seed);
    let mut homomorphism = Check::new(suite, "pair-composition-matches-matrix-product");
    let mut associativity = Check::new(suite, "associativity");
    let mut inverse = Check::new(suite, "inverse-pair-gives-two-sided-inverse");
    let mut identity = Check::new(suite, "identity-law");
    let mut conversion = Check::new(suite, "flavor-conversion-is-multiplicative");
    let mut ftra = Check::new(suite, "array-action-on-moments");
    let unit = RiordanArray::new(&UmbraPair::identity(order), Flavor::Exponential);
    for _ in 0..POLY_SAMPLES {
        let pairs = [
            random_pair(&mut sampler, order),
            random_pair(&mut sampler, order),
            random_pair(&mut sampler, order),
        ];
        let inputs = || pairs.iter().map(pair_text).collect::<Vec<_>>().join(" | ");
        let [a, b, c] = pairs.clone().map(|p| RiordanArray::new(&p, Flavor::Exponential));

        homomorphism.compare(
            inputs,
            Ok(Rows(matrix_product(a.entries(), b.entries()))),
            pairs[0]
                .compose(&pairs[1])
                .map(|p| Rows(RiordanArray::new(&p, Flavor::Exponential).entries().to_vec())),
        );
        let ab_c = a.multiply(&b).and_then(|ab| ab.multiply(&c));
        let a_bc = b.multiply(&c).and_then(|bc| a.multiply(&bc));
        associativity.compare(
            inputs,
            ab_c.map(|m| Rows(m.entries().to_vec())),
            a_bc.map(|m| Rows(m.entries().to_vec())),
        );
        for flavor in [Flavor::Exponential, Flavor::Ordinary] {
            let arr = RiordanArray::new(&pairs[0], flavor);
            let size = order + 1;
            inverse.holds(
                || format!("{} flavor={flavor}", pair_text(&pairs[0])),
                arr.inverse().map(|inv| {
                    matrix_product(arr.entries(), inv.entries()) == identity_matrix(size)
                        && matrix_product(inv.entries(), arr.entries()) == identity_matrix(size)
                }),
            );
        }
        identity.holds(inputs, a.multiply(&unit).map(|m| m.entries() == a.entries()));
        identity.holds(inputs, unit.multiply(&a).map(|m| m.entries() == a.entries()));
        conversion.compare(
            inputs,
            a.multiply(&b).map(|m| Rows(m.convert().entries().to_vec())),
            a.convert().multiply(&b.convert()).map(|m| Rows(m.entries().to_vec())),
        );
        let eta = sampler.umbra(order);
        ftra.compare(
            || format!("{} eta={eta}", pair_text(&pairs[0])),
            a.apply(&eta),
            ftra_umbral(&pairs[0], &eta),
        );
    }
    vec![pascal_check, homomorphism, associativity, inverse, identity, conversion, ftra]
}

// ---------------------------------------------------------------- families

fn small_fraction(sampler: &mut UmbraSampler, range: usize) -> Rational {
    frac(
        sampler.below(2 * range + 1) as i64 - range as i64,
        sampler.below(4) as i64 + 1,
    )
}

fn random_families(sampler: &mut UmbraSampler) -> Vec<FamilyKind> {
    let mut lambda = small_fraction(sampler, 4);
    while lambda.is_zero() {
        lambda = small_fraction(sampler, 4);
    }
    let kind = loop {
        let candidate = FamilyKind::Meixner {
            b: small_fraction(sampler, 4),
            c: small_fraction(sampler, 4),
        };
        if candidate.validate().is_ok() {
            break candidate;
        }
    };
    vec![
        FamilyKind::ChebyshevU,
        FamilyKind::Gegenbauer { lambda },
        kind,
        FamilyKind::MittagLeffler,
        FamilyKind::Pidduck,
    ]
}

fn families_suite(order: usize, seed: u64) -> Vec<Check> {
    let suite = Suite::Families;
    let mut sampler = UmbraSampler::new(seed);
    let mut explicit = Check::new(suite, "explicit-sum-equals-gf-oracle");
    let mut recurrence = Check::new(suite, "chebyshev-three-term-recurrence");
    let mut reduction = Check::new(suite, "gegenbauer-at-one-is-chebyshev");
    let mut display = Check::new(suite, "shifted-basis-display");
    let mut mittag = Check::new(suite, "mittag-leffler-from-meixner-sum");
    let mut pidduck = Check::new(suite, "pidduck-from-mittag-leffler");
    let mut coordinates = Check::new(suite, "binomial-basis-coordinates");
    let mut sheffer = Check::new(suite, "sheffer-route");
    let mut degenerate = Check::new(suite, "master-degenerate-q-t-zero");

    let mut kinds = vec![FamilyKind::Gegenbauer { lambda: frac(1, 2) }];
    for _ in 0..3 {
        kinds.extend(random_families(&mut sampler));
    }
    for kind in &kinds {
        for n in 0..=order {
            explicit.compare(|| format!("{kind} n={n}"), kind.polynomial(n), kind.gf_oracle(n));
        }
        for n in 0..=order {
            if let Some(coords) = kind.binomial_basis_coords(n) {
                let mut expected = kind.polynomial(n).map(|p| p.to_binomial_basis()).unwrap_or_default();
                expected.resize(n + 1, int(0));
                coordinates.compare(
                    || format!("{kind} n={n}"),
                    Ok(Polynomial::new(coords)),
                    Ok(Polynomial::new(expected)),
                );
            }
        }
        if let Ok(Some((pair, b0))) = kind.sheffer_pair(order) {
            let seq = sheffer_sequence(&pair);
            for n in 0..=order {
                sheffer.compare(
                    || format!("{kind} n={n}"),
                    kind.polynomial(n),
                    Ok(seq.get(n).scale_var(&b0)),
                );
            }
        }
        if let FamilyKind::Gegenbauer { lambda } = kind {
            for n in 0..=order {
                display.compare(
                    || format!("{kind} n={n}"),
                    Ok(families::gegenbauer(n, lambda)),
                    Ok(families::gegenbauer_shifted_basis(n, lambda)),
                );
            }
        }
    }
    for n in 0..=order {
        recurrence.compare(|| format!("n={n}"), Ok(families::chebyshev_u(n)), Ok(families::chebyshev_u_recurrence(n)));
        reduction.compare(|| format!("n={n}"), Ok(families::gegenbauer(n, &int(1))), Ok(families::chebyshev_u(n)));
        display.compare(
            || format!("chebyshev-u n={n}"),
            Ok(families::chebyshev_u(n)),
            Ok(families::chebyshev_u_shifted_basis(n)),
        );
        mittag.compare(
            || format!("n={n}"),
            Ok(families::mittag_leffler(n)),
            Ok(families::meixner1_explicit(n, &int(0), &int(-1))),
        );
        pidduck.compare(
            || format!("n={n}"),
            Ok(families::pidduck(n)),
            Ok(families::pidduck_from_mittag_leffler(n)),
        );
    }
    display.compare(
        || "chebyshev-u n=2 is 4x^2 - 1".into(),
        Ok(families::chebyshev_u_shifted_basis(2)),
        Ok(Polynomial::new(vec![int(-1), int(0), int(4)])),
    );
    for _ in 0..3 {
        let y = small_fraction(&mut sampler, 5);
        let params = MasterParams {
            xval: Polynomial::x(),
            y: YParam::Value(y.clone()),
            q: int(0),
            t: int(0),
        };
        for n in 0..=order {
            degenerate.compare(
                || format!("y={y} n={n}"),
                Ok(families::master_polynomial(n, &params).scale(&(Rational::one() / factorial(n)))),
                Ok(BiPoly::from_x(&Polynomial::monomial(crate::exact_numbers::binomial(&y, n), n))),
            );
        }
    }
    vec![explicit, recurrence, reduction, display, mittag, pidduck, coordinates, sheffer, degenerate]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bell_triangle_values() {
        let expected: Vec<Rational> = [1, 1, 2, 5, 15, 52, 203].iter().map(|&v| int(v)).collect();
        assert_eq!(bell_triangle(6), expected);
    }

    #[test]
    fn suite_names_round_trip() {
        for suite in Suite::EACH.into_iter().chain([Suite::All]) {
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn each_suite_passes_at_small_order() {
        for suite in Suite::EACH {
            let report = run(suite, 6, 1).unwrap();
            assert!(report.passed(), "{report}");
            assert!(report.checks.iter().all(|c| c.instances > 0), "{report}");
        }
    }

    #[test]
    fn failure_keeps_first_counterexample() {
        let mut check = Check::new(Suite::Duality, "demo");
        check.compare(|| "a".into(), Ok(1), Ok(1));
        check.compare(|| "b".into(), Ok(1), Ok(2));
        check.compare(|| "c".into(), Ok(3), Ok(4));
        assert_eq!(check.instances, 3);
        let cx = check.failure.unwrap();
        assert_eq!((cx.inputs.as_str(), cx.lhs.as_str(), cx.rhs.as_str()), ("b", "1", "2"));
    }

    #[test]
    fn order_ceiling() {
        assert!(run(Suite::Duality, MAX_ORDER + 1, 0).is_err());
    }

    #[test]
    fn deterministic() {
        assert_eq!(run(Suite::Abel, 5, 9).unwrap(), run(Suite::Abel, 5, 9).unwrap());
    }
}
