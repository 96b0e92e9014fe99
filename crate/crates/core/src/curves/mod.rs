//! Explicit curve models for both families, symbolic checks of their
//! automorphisms, and genus-2 invariants.
//!
//! Expression strings use the grammar of [`CycloElement::to_expr`]: variables
//! `z, y, x, u, v`, operators `+ - * / ^` and constants `zeta(n)^j`.

pub mod igusa;
pub mod maps;

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::is_prime;
use crate::cyclotomic::CycloElement;
use crate::groups::find_twist_exponent;
use crate::poly::Poly;
use crate::{Error, Result};

pub use igusa::{igusa_clebsch, isomorphism_check, IgusaInvariants};
pub use maps::{FactoredRational, LaurentMap, LaurentPoly2, ZyMap};

/// Largest `k * deg F` for which the dense cross-check of `tau(F)` is run.
pub const DENSE_CHECK_LIMIT: u64 = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ModelFamily {
    /// `y^q = F(z)` with the order-3 automorphism `tau`.
    Gq3,
    /// `y^2 = x(x^(2^(m-1)) - 1)`.
    Gm,
    /// The quotient `v^2 = p(u)` of the `Gm` curve by `<b>`.
    GmQuotient,
}

impl ModelFamily {
    pub fn tag(self) -> &'static str {
        match self {
            ModelFamily::Gq3 => "G_{q,3}",
            ModelFamily::Gm => "G_m",
            ModelFamily::GmQuotient => "G_m/<b>",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum MapKind {
    Zy(ZyMap),
    Laurent(LaurentMap),
}

impl MapKind {
    pub fn to_expr(&self) -> String {
        match self {
            MapKind::Zy(m) => m.to_expr(),
            MapKind::Laurent(m) => m.to_expr(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Automorphism {
    pub name: String,
    pub map: MapKind,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CurveModel {
    pub family: ModelFamily,
    /// Conductor of the coefficient field.
    pub conductor: u64,
    /// Power of the fibre variable: `q` for `Gq3`, `2` otherwise.
    pub exponent: u64,
    /// Right-hand side in the base variable, expanded.
    pub rhs: Poly,
    /// The same right-hand side in factored form when it is known.
    pub rhs_factored: Option<FactoredRational>,
    /// `z` or `x` or `u`.
    pub base_var: &'static str,
    /// Auxiliary integers such as `m` and `m'`.
    pub aux: Vec<(String, i64)>,
    pub automorphisms: Vec<Automorphism>,
    /// The cover of the line this model sits over, if any.
    pub tower: Option<String>,
}

impl CurveModel {
    pub fn equation(&self) -> String {
        let fibre = if self.family == ModelFamily::GmQuotient { "v" } else { "y" };
        let rhs = match &self.rhs_factored {
            Some(f) => f.to_expr(self.base_var),
            None => self.rhs.to_expr(self.base_var),
        };
        format!("{fibre}^{} = {rhs}", self.exponent)
    }

    pub fn aux(&self, name: &str) -> Option<i64> {
        self.aux.iter().find(|(n, _)| n == name).map(|(_, v)| *v)
    }

    pub fn automorphism(&self, name: &str) -> Option<&MapKind> {
        self.automorphisms
            .iter()
            .find(|a| a.name == name)
            .map(|a| &a.map)
    }

    /// Degree of `rhs`.
    pub fn degree(&self) -> usize {
        self.rhs.degree().unwrap_or(0)
    }

    /// Genus of a hyperelliptic model `y^2 = rhs` with squarefree `rhs`.
    pub fn hyperelliptic_genus(&self) -> Option<u64> {
        if self.exponent != 2 {
            return None;
        }
        Some((self.degree() as u64).saturating_sub(1) / 2)
    }
}

/// One verified identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerificationReport {
    pub checks: Vec<IdentityCheck>,
}

impl VerificationReport {
    fn pass(&mut self, name: &str, detail: String) {
        self.checks.push(IdentityCheck {
            name: name.to_string(),
            detail,
        });
    }

    pub fn names(&self) -> Vec<&str> {
        self.checks.iter().map(|c| c.name.as_str()).collect()
    }
}

fn fail(check: &str, difference: String) -> Error {
    Error::IdentityFailed {
        check: check.to_string(),
        difference,
    }
}

fn omega() -> CycloElement {
    CycloElement::zeta_pow(3, 1)
}

/// `(z - 1)(z - w)^k (z - w^2)^(k^2)`.
fn gq3_rhs(k: u64) -> FactoredRational {
    let w = omega();
    FactoredRational::linear(CycloElement::one(3), 1)
        .mul(&FactoredRational::linear(w.clone(), k as i64))
        .mul(&FactoredRational::linear(&w * &w, (k * k) as i64))
}

fn tau_map(k: u64, m: i64, m_prime: i64) -> Result<ZyMap> {
    let w = omega();
    let coeff = FactoredRational::constant(w.pow(m_prime)?)
        .mul(&FactoredRational::linear(&w * &w, -m));
    Ok(ZyMap {
        lambda: w,
        coeff,
        e: k,
    })
}

/// The model `y^q = (z-1)(z-w)^k(z-w^2)^(k^2)` of the `G_{q,3}` curve.
///
/// `k` must be the canonical twist exponent; it defaults to it.
pub fn gq3_model(q: u64, k: Option<u64>) -> Result<CurveModel> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    let canonical = find_twist_exponent(q, 3)?;
    let k = k.unwrap_or(canonical);
    if k != canonical {
        return Err(Error::BadTwist { q, k });
    }
    let m = ((k * k * k - 1) / q) as i64;
    let m_prime = ((k * k + k + 1) / q) as i64;
    gq3_model_with(q, k, m, m_prime)
}

/// A `G_{q,3}` model with arbitrary data. Nothing is checked, so this
/// can build deliberately broken models.
pub fn gq3_model_with(q: u64, k: u64, m: i64, m_prime: i64) -> Result<CurveModel> {
    let f = gq3_rhs(k);
    let sigma = ZyMap {
        lambda: CycloElement::one(1),
        coeff: FactoredRational::constant(CycloElement::zeta_pow(q, 1)),
        e: 1,
    };
    let tau = tau_map(k, m, m_prime)?;
    let (rhs, _) = f.to_fraction();
    Ok(CurveModel {
        family: ModelFamily::Gq3,
        conductor: 3 * q,
        exponent: q,
        rhs,
        rhs_factored: Some(f),
        base_var: "z",
        aux: vec![
            ("q".to_string(), q as i64),
            ("k".to_string(), k as i64),
            ("m".to_string(), m),
            ("m'".to_string(), m_prime),
        ],
        automorphisms: vec![
            Automorphism {
                name: "sigma".to_string(),
                map: MapKind::Zy(sigma),
            },
            Automorphism {
                name: "tau".to_string(),
                map: MapKind::Zy(tau),
            },
        ],
        tower: Some("z^3 = x/(x - 2), branch points x = 1, 0, 2".to_string()),
    })
}

fn zy(model: &CurveModel, name: &str) -> Result<ZyMap> {
    match model.automorphism(name) {
        Some(MapKind::Zy(m)) => Ok(m.clone()),
        _ => Err(Error::UnsupportedFamily("missing z,y automorphism")),
    }
}

fn laurent(model: &CurveModel, name: &str) -> Result<LaurentMap> {
    match model.automorphism(name) {
        Some(MapKind::Laurent(m)) => Ok(m.clone()),
        _ => Err(Error::UnsupportedFamily("missing x,y automorphism")),
    }
}

fn aux(model: &CurveModel, name: &str) -> Result<i64> {
    model
        .aux(name)
        .ok_or_else(|| Error::BadParameter(format!("model lacks {name}")))
}

/// `(R y^e)^q = F(lambda z)` modulo `y^q = F`.
fn preserves_equation(map: &ZyMap, q: u64, f: &FactoredRational) -> Result<bool> {
    let lhs = map.coeff.pow(q as i64)?.mul(&f.pow(map.e as i64)?);
    Ok(lhs == f.substitute_scaled(&map.lambda)?)
}

/// Symbolic checks of `sigma` and `tau` on a `G_{q,3}` model.
pub fn verify_gq3_automorphisms(model: &CurveModel) -> Result<VerificationReport> {
    if model.family != ModelFamily::Gq3 {
        return Err(Error::UnsupportedFamily("expected a G_{q,3} model"));
    }
    let q = model.exponent;
    let k = aux(model, "k")? as u64;
    let m = aux(model, "m")?;
    let m_prime = aux(model, "m'")?;
    let f = model
        .rhs_factored
        .clone()
        .ok_or(Error::UnsupportedFamily("G_{q,3} model without factored F"))?;
    let sigma = zy(model, "sigma")?;
    let tau = zy(model, "tau")?;
    let w = omega();
    let mut report = VerificationReport::default();

    if m <= 0 || m_prime <= 0 {
        return Err(fail("m, m' positive", format!("m = {m}, m' = {m_prime}")));
    }

    // F(wz) = R_tau^q F^k
    let lhs = f.substitute_scaled(&w)?;
    let rhs = tau.coeff.pow(q as i64)?.mul(&f.pow(k as i64)?);
    if lhs != rhs {
        return Err(fail("tau(F)", lhs.quotient_expr(&rhs, "z")));
    }
    report.pass(
        "tau(F)",
        format!("F(w z) = ({})^{q} * F^{k}", tau.coeff.to_expr("z")),
    );

    let deg_f = 1 + k + k * k;
    if k * deg_f <= DENSE_CHECK_LIMIT {
        // F(wz) (z - w^2)^(mq) = w^(m'q) F^k as dense polynomials
        let fz = &model.rhs;
        let shift = Poly::linear(&(&w * &w)).pow((m as u64 * q) as u32);
        let lhs = &fz.substitute_scaled(&w) * &shift;
        let rhs = fz.pow(k as u32).scale(&w.pow(m_prime * q as i64)?);
        let diff = &lhs - &rhs;
        if !diff.is_zero() {
            return Err(fail("tau(F) expanded", diff.to_expr("z")));
        }
        report.pass(
            "tau(F) expanded",
            format!("degree {} expansion, zero remainder", deg_f * k),
        );
    }

    for (name, map) in [("sigma", &sigma), ("tau", &tau)] {
        if !preserves_equation(map, q, &f)? {
            return Err(fail(
                &format!("{name} preserves y^q = F"),
                map.coeff
                    .pow(q as i64)?
                    .mul(&f.pow(map.e as i64)?)
                    .quotient_expr(&f.substitute_scaled(&map.lambda)?, "z"),
            ));
        }
        report.pass(&format!("{name} preserves y^q = F"), map.to_expr());
    }

    let sq = sigma.pow(q, q, &f)?;
    if !sq.is_identity() || sigma.is_identity() {
        return Err(fail("sigma^q = 1", sq.to_expr()));
    }
    report.pass("sigma^q = 1", format!("sigma has order {q}"));

    let t3 = tau.pow(3, q, &f)?;
    if !t3.is_identity() || tau.is_identity() {
        return Err(fail("tau^3 = 1", t3.to_expr()));
    }
    report.pass("tau^3 = 1", "tau has order 3".to_string());

    let lhs = tau.compose(&sigma, q, &f)?;
    let rhs = sigma.pow(k, q, &f)?.compose(&tau, q, &f)?;
    if lhs != rhs {
        return Err(fail(
            "tau sigma = sigma^k tau",
            format!("{} vs {}", lhs.to_expr(), rhs.to_expr()),
        ));
    }
    report.pass("tau sigma = sigma^k tau", lhs.to_expr());
    Ok(report)
}

/// Data of the `G_m` model: `N = 2^(m-1)`, `d = N - 1`, `xi = zeta(2^m)`.
fn gm_consts(m: u32) -> (u64, u64, i64, CycloElement) {
    let n2 = 1u64 << m;
    let big_n = n2 / 2;
    (n2, big_n, big_n as i64 - 1, CycloElement::zeta_pow(n2, 1))
}

fn check_m(m: u32) -> Result<()> {
    if !(3..=20).contains(&m) {
        return Err(Error::BadParameter(format!("m = {m} must lie in 3..=20")));
    }
    Ok(())
}

/// The model `y^2 = x(x^(2^(m-1)) - 1)` with the maps `a`, `b`, `j`.
pub fn gm_model(m: u32) -> Result<CurveModel> {
    check_m(m)?;
    let (n2, big_n, d, xi) = gm_consts(m);
    let xp = |e: i64| CycloElement::zeta_pow(n2, e);
    let i = xp(1 << (m - 2));
    let a = LaurentMap {
        lambda: xp(2),
        s: 1,
        mu: xi.clone(),
        c: 0,
    };
    let b = LaurentMap {
        lambda: xp(-2),
        s: -1,
        mu: -(&i * &xp(d)),
        c: -((1i64 << (m - 2)) + 1),
    };
    let j = LaurentMap {
        lambda: CycloElement::one(n2),
        s: 1,
        mu: CycloElement::from_integer(n2, -1),
        c: 0,
    };
    let mut coeffs = vec![CycloElement::zero(n2); big_n as usize + 2];
    coeffs[1] = CycloElement::from_integer(n2, -1);
    coeffs[big_n as usize + 1] = CycloElement::one(n2);
    Ok(CurveModel {
        family: ModelFamily::Gm,
        conductor: n2,
        exponent: 2,
        rhs: Poly::from_coeffs(coeffs),
        rhs_factored: None,
        base_var: "x",
        aux: vec![("m".to_string(), m as i64), ("d".to_string(), d)],
        automorphisms: ["a", "b", "j"]
            .into_iter()
            .zip([a, b, j])
            .map(|(n, map)| Automorphism {
                name: n.to_string(),
                map: MapKind::Laurent(map),
            })
            .collect(),
        tower: None,
    })
}

/// `y^2 - rhs(x)` as a [`LaurentPoly2`].
fn hyperelliptic_relation(rhs: &Poly) -> LaurentPoly2 {
    let mut p = LaurentPoly2::default();
    p.add_term(0, 1, CycloElement::one(1));
    for (e, c) in rhs.coeffs().iter().enumerate() {
        if !c.is_zero() {
            p.add_term(e as i64, 0, -c);
        }
    }
    p
}

/// Image of `y^2 - rhs(x)` under the substitution of `map`.
fn pull_back(rhs: &Poly, map: &LaurentMap) -> Result<LaurentPoly2> {
    let mut out = LaurentPoly2::default();
    let mu2 = &map.mu * &map.mu;
    out.add_term(2 * map.c, 1, mu2);
    for (e, c) in rhs.coeffs().iter().enumerate() {
        if !c.is_zero() {
            let e = e as i64;
            out.add_term(map.s * e, 0, -(c * &map.lambda.pow(e)?));
        }
    }
    Ok(out)
}

/// Fixed points `(x0, +-y0)` of an involution `x -> lambda/x`, `y -> mu x^c y`:
/// returns the `x0` with `x0^2 = lambda` and `mu x0^c = 1`.
fn fixed_abscissae(map: &LaurentMap, candidates: &[CycloElement]) -> Result<Vec<CycloElement>> {
    let mut out = Vec::new();
    for x in candidates {
        let moved = &map.lambda * &x.pow(map.s)?;
        if moved == *x && (&map.mu * &x.pow(map.c)?).is_one() {
            out.push(x.clone());
        }
    }
    Ok(out)
}

/// Symbolic checks of `a`, `b`, `j` on a `G_m` model.
pub fn verify_gm_automorphisms(model: &CurveModel) -> Result<VerificationReport> {
    if model.family != ModelFamily::Gm {
        return Err(Error::UnsupportedFamily("expected a G_m model"));
    }
    let m = aux(model, "m")? as u32;
    let (n2, big_n, d, _) = gm_consts(m);
    let xp = |e: i64| CycloElement::zeta_pow(n2, e);
    let a = laurent(model, "a")?;
    let b = laurent(model, "b")?;
    let j = laurent(model, "j")?;
    let mut report = VerificationReport::default();

    let rel = hyperelliptic_relation(&model.rhs);
    for (name, map) in [("a", &a), ("b", &b), ("j", &j)] {
        let image = pull_back(&model.rhs, map)?;
        let expected = rel.scale_shift(&(&map.mu * &map.mu), 2 * map.c);
        let diff = image.sub(&expected);
        if !diff.is_zero() {
            return Err(fail(&format!("{name} preserves the equation"), diff.to_expr()));
        }
        report.pass(
            &format!("{name} preserves the equation"),
            format!(
                "{} ; relation scaled by ({})*x^{}",
                map.to_expr(),
                &map.mu * &map.mu,
                2 * map.c
            ),
        );
    }

    let id = LaurentMap::identity();
    let same = |x: &LaurentMap, y: &LaurentMap| x.s == y.s && x.c == y.c && x.lambda == y.lambda && x.mu == y.mu;
    let checks: [(&str, LaurentMap, LaurentMap); 4] = [
        ("b^2 = 1", b.compose(&b)?, id.clone()),
        ("a^(2^m) = 1", a.pow(n2)?, id.clone()),
        ("b a b = a^d", b.compose(&a)?.compose(&b)?, a.pow(d as u64)?),
        ("a^(2^(m-1)) = j", a.pow(big_n)?, j.clone()),
    ];
    for (name, lhs, rhs) in checks {
        if !same(&lhs, &rhs) {
            return Err(fail(name, format!("{} vs {}", lhs.to_expr(), rhs.to_expr())));
        }
        report.pass(name, lhs.to_expr());
    }
    let a_half = a.pow(big_n / 2)?;
    if same(&a_half, &id) || same(&b, &id) {
        return Err(fail("a, b nontrivial", a_half.to_expr()));
    }

    // both square roots of lambda for each involution
    let root = xp(d);
    let candidates = [root.clone(), -&root];
    let bj = b.compose(&j)?;
    for (name, map, sign) in [("b", &b, 1i64), ("bj", &bj, -1)] {
        let xs = fixed_abscissae(map, &candidates)?;
        let x0 = root.scale_int(sign);
        if xs != [x0.clone()] {
            let found: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
            return Err(fail(
                &format!("fixed points of {name}"),
                format!("fixed abscissae [{}]", found.join(", ")),
            ));
        }
        let y2 = model.rhs.eval(&x0);
        let want = root.scale_int(-2 * sign);
        if y2 != want || y2.is_zero() {
            return Err(fail(
                &format!("fixed points of {name}"),
                format!("y^2 = {} at x = {}", y2, x0),
            ));
        }
        report.pass(
            &format!("fixed points of {name}"),
            format!("two points with x = {x0}, y^2 = {y2}"),
        );
    }

    let w = weierstrass_points(model)?;
    if w != big_n + 2 {
        return Err(fail("Weierstrass points", format!("{w} instead of {}", big_n + 2)));
    }
    report.pass("Weierstrass points", format!("{w} = 2^(m-1) + 2"));
    Ok(report)
}

/// Branch points of `x` on a `G_m` model, counted by exhibiting the
/// `N + 1` distinct finite roots of `x(x^N - 1)` and the point at infinity.
pub fn weierstrass_points(model: &CurveModel) -> Result<u64> {
    let m = aux(model, "m")? as u32;
    let (n2, big_n, _, _) = gm_consts(m);
    let mut roots = vec![CycloElement::zero(n2)];
    roots.extend((0..big_n).map(|k| CycloElement::zeta_pow(n2, 2 * k as i64)));
    for r in &roots {
        if !model.rhs.eval(r).is_zero() {
            return Err(fail("Weierstrass points", format!("{r} is not a root")));
        }
    }
    for (i, r) in roots.iter().enumerate() {
        if roots[..i].contains(r) {
            return Err(fail("Weierstrass points", format!("repeated root {r}")));
        }
    }
    let deg = model.degree() as u64;
    if roots.len() as u64 != deg {
        return Err(fail("Weierstrass points", format!("{} roots, degree {deg}", roots.len())));
    }
    Ok(deg + deg % 2)
}

/// The quotient of the `G_m` curve by `<b>` and the data behind it.
#[derive(Debug, Clone, PartialEq)]
pub struct QuotientData {
    pub model: CurveModel,
    /// Numerator and denominator of `f(x) = xi (xi x + 1)^2 / (xi^2 x^2 + 1)`.
    pub f_num: Poly,
    pub f_den: Poly,
    /// `f(xi^(2k))` for `k < 2^(m-2)`.
    pub branch_values: Vec<CycloElement>,
    /// `f(xi^d)`, the image of the fixed points of `b`.
    pub fixed_point_image: CycloElement,
    pub genus: u64,
    pub report: VerificationReport,
}

/// `x^2 p(1/(c x))` for `p` of degree at most 2.
fn invert_quadratic(p: &Poly, c: &CycloElement) -> Result<Poly> {
    let inv = c.inverse()?;
    let coeffs = (0..=2)
        .map(|i| Ok(&p.coeff(2 - i) * &inv.pow(2 - i as i64)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(Poly::from_coeffs(coeffs))
}

/// `X = Y/<b> : v^2 = u(u - xi) prod_{k < 2^(m-2)} (u - f(xi^(2k)))`.
pub fn gm_quotient_model(m: u32) -> Result<QuotientData> {
    check_m(m)?;
    let (n2, big_n, d, xi) = gm_consts(m);
    let xp = |e: i64| CycloElement::zeta_pow(n2, e);
    let mut report = VerificationReport::default();

    let lin = Poly::from_coeffs(vec![CycloElement::one(n2), xi.clone()]);
    let f_num = (&lin * &lin).scale(&xi);
    let f_den = Poly::from_coeffs(vec![CycloElement::one(n2), CycloElement::zero(n2), xp(2)]);

    // f(1/(xi^2 x)) = f(x) after clearing x^2 from both halves
    let xi2 = xp(2);
    let num_t = invert_quadratic(&f_num, &xi2)?;
    let den_t = invert_quadratic(&f_den, &xi2)?;
    let diff = &(&num_t * &f_den) - &(&f_num * &den_t);
    if !diff.is_zero() {
        return Err(fail("f invariant under x -> 1/(xi^2 x)", diff.to_expr("x")));
    }
    report.pass(
        "f invariant under x -> 1/(xi^2 x)",
        format!("f = ({}) / ({})", f_num.to_expr("x"), f_den.to_expr("x")),
    );

    let f_at = |x: &CycloElement| -> Result<CycloElement> {
        let den = f_den.eval(x);
        if den.is_zero() {
            return Err(fail("f defined at branch points", format!("pole at {x}")));
        }
        Ok(&f_num.eval(x) * &den.inverse()?)
    };

    let fixed_point_image = f_at(&xp(d))?;
    if !fixed_point_image.is_zero() {
        return Err(fail("f(xi^d) = 0", fixed_point_image.to_string()));
    }
    report.pass("f(xi^d) = 0", "fixed points of b lie over u = 0".to_string());
    let at_zero = f_at(&CycloElement::zero(n2))?;
    if at_zero != xi {
        return Err(fail("f(0) = xi", at_zero.to_string()));
    }
    report.pass("f(0) = f(oo) = xi", "x = 0 and x = oo lie over u = xi".to_string());

    let half = big_n / 2;
    let branch_values = (0..half)
        .map(|k| f_at(&xp(2 * k as i64)))
        .collect::<Result<Vec<_>>>()?;
    let mut all = vec![CycloElement::zero(n2), xi.clone()];
    all.extend(branch_values.iter().cloned());
    for (i, r) in all.iter().enumerate() {
        if all[..i].contains(r) {
            return Err(fail("distinct branch values", format!("repeated value {r}")));
        }
    }
    report.pass(
        "distinct branch values",
        format!("{} distinct values including 0 and xi", all.len()),
    );

    let rhs = Poly::from_roots(&all);
    let genus = (rhs.degree().unwrap_or(0) as u64 - 1) / 2;
    let model = CurveModel {
        family: ModelFamily::GmQuotient,
        conductor: n2,
        exponent: 2,
        rhs,
        rhs_factored: None,
        base_var: "u",
        aux: vec![("m".to_string(), m as i64)],
        automorphisms: Vec::new(),
        tower: Some("u = f(x)".to_string()),
    };
    Ok(QuotientData {
        model,
        f_num,
        f_den,
        branch_values,
        fixed_point_image,
        genus,
        report,
    })
}

/// `u^6 - 5 xi u^5 + 2 xi^2 u^4 + 14 xi^3 u^3 - 11 xi^4 u^2 - xi^5 u` over `Q(zeta(16))`.
pub fn reference_sextic() -> Poly {
    let c = [(0, 0), (-1, 5), (-11, 4), (14, 3), (2, 2), (-5, 1), (1, 0)];
    Poly::from_coeffs(
        c.iter()
            .map(|&(k, e)| CycloElement::zeta_pow(16, e).scale_int(k))
            .collect(),
    )
}

/// `-x^5 + 3x^4 + 2x^3 - 6x^2 - 3x + 1` over `Q`.
pub fn reference_quintic() -> Poly {
    Poly::from_ints(1, &[1, -3, -6, 2, 3, -1])
}

/// Both genus-2 models as [`CurveModel`]s, for comparison with the pipeline.
pub fn hyperelliptic_model(rhs: Poly, var: &'static str) -> CurveModel {
    CurveModel {
        family: ModelFamily::GmQuotient,
        conductor: rhs.conductor(),
        exponent: 2,
        rhs,
        rhs_factored: None,
        base_var: var,
        aux: Vec::new(),
        automorphisms: Vec::new(),
        tower: None,
    }
}

/// Absolute-invariant comparison of two hyperelliptic genus-2 models.
pub fn models_isomorphic(a: &CurveModel, b: &CurveModel) -> Result<bool> {
    if a.exponent != 2 || b.exponent != 2 {
        return Err(Error::UnsupportedFamily("isomorphism test needs y^2 = p models"));
    }
    isomorphism_check(&a.rhs, &b.rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gq3_small() {
        for q in [7, 13] {
            let model = gq3_model(q, None).unwrap();
            let r = verify_gq3_automorphisms(&model).unwrap();
            assert!(r.names().contains(&"tau(F) expanded"));
        }
        let m = gq3_model(13, None).unwrap();
        assert_eq!((m.aux("m"), m.aux("m'")), (Some(2), Some(1)));
    }

    #[test]
    fn gq3_tampered() {
        let good = gq3_model(7, None).unwrap();
        let bad = gq3_model_with(7, 7 - 1 - 2, good.aux("m").unwrap(), good.aux("m'").unwrap()).unwrap();
        assert!(matches!(
            verify_gq3_automorphisms(&bad),
            Err(Error::IdentityFailed { .. })
        ));
        assert_eq!(gq3_model(7, Some(4)), Err(Error::BadTwist { q: 7, k: 4 }));
    }

    #[test]
    fn gm_small() {
        for m in 3..=5 {
            let model = gm_model(m).unwrap();
            verify_gm_automorphisms(&model).unwrap();
            assert_eq!(model.hyperelliptic_genus(), Some(1 << (m - 2)));
        }
    }

    #[test]
    fn gm_flipped_b_fails() {
        let mut model = gm_model(3).unwrap();
        let b = laurent(&model, "b").unwrap();
        let flipped = LaurentMap { mu: -&b.mu, ..b };
        model.automorphisms[1].map = MapKind::Laurent(flipped);
        assert!(verify_gm_automorphisms(&model).is_err());
    }

    #[test]
    fn quotient_degrees() {
        let q3 = gm_quotient_model(3).unwrap();
        assert_eq!((q3.model.degree(), q3.genus), (4, 1));
        let q4 = gm_quotient_model(4).unwrap();
        assert_eq!((q4.model.degree(), q4.genus), (6, 2));
    }
}
