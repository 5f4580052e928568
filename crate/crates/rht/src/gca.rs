//! Free graded-commutative differential algebras.
//!
//! Monomials are sorted (generator, exponent) lists; odd generators square to zero
//! and even generators commute with everything, so the Koszul sign of a product is
//! (-1)^(number of odd-odd transpositions in the merge). Differentials are stored on
//! generators and extended by the graded Leibniz rule d(ab) = da.b + (-1)^|a| a.db.
//!
//! Every algebra carries a truncation degree; products that would leave it are a
//! hard error, never silently dropped, so a computation that ran is exact.

use crate::error::{Error, Result};
use crate::linalg::Vector;
use crate::scalar::Scalar;
use std::collections::BTreeMap;
use std::fmt::Write as _;

pub type GenId = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub id: GenId,
    pub name: String,
    pub degree: usize,
    /// Hodge-type bidegree, carried only on generators and propagated
    /// multiplicatively; (p, q) may be negative in shifted contexts.
    pub bidegree: Option<(i64, i64)>,
}

/// Product of generator powers, sorted by generator id. The unit is the empty
/// product. Ordering is lexicographic on the flattened id sequence (a prefix
/// sorts first), which fixes the basis order of every degree slice.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    factors: Vec<(GenId, u32)>,
}

impl Monomial {
    pub fn unit() -> Self {
        Monomial {
            factors: Vec::new(),
        }
    }

    pub fn generator(id: GenId) -> Self {
        Monomial {
            factors: vec![(id, 1)],
        }
    }

    pub fn from_factors(mut factors: Vec<(GenId, u32)>) -> Self {
        factors.retain(|&(_, e)| e > 0);
        factors.sort_by_key(|&(id, _)| id);
        Monomial { factors }
    }

    pub fn factors(&self) -> &[(GenId, u32)] {
        &self.factors
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn flat_ids(&self) -> impl Iterator<Item = GenId> + '_ {
        self.factors
            .iter()
            .flat_map(|&(id, e)| std::iter::repeat(id).take(e as usize))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.flat_ids().cmp(other.flat_ids())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Finite scalar combination of monomials. Addition-level operations need no
/// algebra context; anything involving degrees, signs, or differentials lives on
/// [`FreeCdga`].
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GcaElement {
    terms: BTreeMap<Monomial, Scalar>,
}

impl GcaElement {
    pub fn zero() -> Self {
        GcaElement::default()
    }

    pub fn one() -> Self {
        GcaElement::term(Monomial::unit(), Scalar::one())
    }

    pub fn generator(id: GenId) -> Self {
        GcaElement::term(Monomial::generator(id), Scalar::one())
    }

    pub fn term(m: Monomial, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        GcaElement { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: Monomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Occupied(mut o) => {
                let sum = &*o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
        }
    }

    pub fn add(&self, other: &GcaElement) -> GcaElement {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> GcaElement {
        if c.is_zero() {
            return GcaElement::zero();
        }
        GcaElement {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), v * c))
                .collect(),
        }
    }

    pub fn neg(&self) -> GcaElement {
        self.scale(&Scalar::from_int(-1))
    }

    pub fn sub(&self, other: &GcaElement) -> GcaElement {
        self.add(&other.neg())
    }

    pub fn conj_coefficients(&self) -> GcaElement {
        GcaElement {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), v.conj()))
                .collect(),
        }
    }
}

/// Free graded-commutative DGA on named generators, truncated above
/// `truncation_degree`.
#[derive(Debug, Clone)]
pub struct FreeCdga {
    pub name: String,
    generators: Vec<Generator>,
    /// d on each generator; zero by default. Degree raises by exactly 1.
    d_gen: Vec<GcaElement>,
    truncation: usize,
}

impl FreeCdga {
    pub fn new(name: impl Into<String>, truncation: usize) -> Self {
        FreeCdga {
            name: name.into(),
            generators: Vec::new(),
            d_gen: Vec::new(),
            truncation,
        }
    }

    pub fn truncation_degree(&self) -> usize {
        self.truncation
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn generator(&self, id: GenId) -> &Generator {
        &self.generators[id]
    }

    pub fn generator_by_name(&self, name: &str) -> Option<&Generator> {
        self.generators.iter().find(|g| g.name == name)
    }

    pub fn add_generator(
        &mut self,
        name: impl Into<String>,
        degree: usize,
        bidegree: Option<(i64, i64)>,
    ) -> Result<GenId> {
        let name = name.into();
        if degree == 0 {
            return Err(Error::Validation(format!(
                "generator {name} has degree 0; generators must have degree >= 1"
            )));
        }
        if degree > self.truncation {
            return Err(Error::TruncationOverflow {
                degree,
                truncation: self.truncation,
            });
        }
        if self.generators.iter().any(|g| g.name == name) {
            return Err(Error::Validation(format!("duplicate generator name {name}")));
        }
        let id = self.generators.len();
        self.generators.push(Generator {
            id,
            name,
            degree,
            bidegree,
        });
        self.d_gen.push(GcaElement::zero());
        Ok(id)
    }

    /// Sets d(generator). The image must be homogeneous of degree + 1 (or zero).
    pub fn set_differential(&mut self, id: GenId, image: GcaElement) -> Result<()> {
        if !image.is_zero() {
            let want = self.generators[id].degree + 1;
            match self.homogeneous_degree(&image) {
                Some(got) if got == want => {}
                got => {
                    return Err(Error::Validation(format!(
                        "d({}) must be homogeneous of degree {want}, got {:?}",
                        self.generators[id].name, got
                    )))
                }
            }
            if want > self.truncation {
                return Err(Error::TruncationOverflow {
                    degree: want,
                    truncation: self.truncation,
                });
            }
        }
        self.d_gen[id] = image;
        Ok(())
    }

    pub fn differential_of_generator(&self, id: GenId) -> &GcaElement {
        &self.d_gen[id]
    }

    pub fn monomial_degree(&self, m: &Monomial) -> usize {
        m.factors()
            .iter()
            .map(|&(id, e)| self.generators[id].degree * e as usize)
            .sum()
    }

    /// Sum of generator bidegrees; `None` if any factor has no bidegree.
    pub fn monomial_bidegree(&self, m: &Monomial) -> Option<(i64, i64)> {
        let mut p = 0i64;
        let mut q = 0i64;
        for &(id, e) in m.factors() {
            let (gp, gq) = self.generators[id].bidegree?;
            p += gp * e as i64;
            q += gq * e as i64;
        }
        Some((p, q))
    }

    /// Degree when the element is homogeneous and nonzero.
    pub fn homogeneous_degree(&self, e: &GcaElement) -> Option<usize> {
        let mut deg = None;
        for (m, _) in e.terms() {
            let d = self.monomial_degree(m);
            match deg {
                None => deg = Some(d),
                Some(d0) if d0 == d => {}
                _ => return None,
            }
        }
        deg
    }

    /// Product of two monomials with the Koszul sign; `None` when an odd
    /// generator repeats.
    pub fn multiply_monomials(&self, a: &Monomial, b: &Monomial) -> Option<(Monomial, i64)> {
        // Count odd-odd inversions: pairs (u in a, v in b) with id(v) < id(u),
        // both of odd degree. Odd generators carry exponent 1, even generators
        // never contribute a sign.
        let mut inversions = 0u64;
        for &(vb, _) in b.factors() {
            if self.generators[vb].degree % 2 == 1 {
                inversions += a
                    .factors()
                    .iter()
                    .filter(|&&(ua, _)| ua > vb && self.generators[ua].degree % 2 == 1)
                    .count() as u64;
            }
        }
        // merge exponents
        let mut map: BTreeMap<GenId, u32> = a.factors().iter().cloned().collect();
        for &(id, e) in b.factors() {
            let entry = map.entry(id).or_insert(0);
            *entry += e;
            if self.generators[id].degree % 2 == 1 && *entry > 1 {
                return None;
            }
        }
        let m = Monomial::from_factors(map.into_iter().collect());
        let sign = if inversions % 2 == 0 { 1 } else { -1 };
        Some((m, sign))
    }

    /// Graded-commutative product. Errors if a nonzero term of the result would
    /// exceed the truncation degree.
    pub fn multiply(&self, a: &GcaElement, b: &GcaElement) -> Result<GcaElement> {
        let mut out = GcaElement::zero();
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                if let Some((m, sign)) = self.multiply_monomials(ma, mb) {
                    let mut c = ca * cb;
                    if sign < 0 {
                        c = -c;
                    }
                    out.add_term(m, &c);
                }
            }
        }
        for (m, _) in out.terms() {
            let d = self.monomial_degree(m);
            if d > self.truncation {
                return Err(Error::TruncationOverflow {
                    degree: d,
                    truncation: self.truncation,
                });
            }
        }
        Ok(out)
    }

    pub fn multiply_all(&self, factors: &[GcaElement]) -> Result<GcaElement> {
        let mut acc = GcaElement::one();
        for f in factors {
            acc = self.multiply(&acc, f)?;
        }
        Ok(acc)
    }

    /// d extended to monomials and elements by the graded Leibniz rule.
    pub fn differential(&self, e: &GcaElement) -> Result<GcaElement> {
        let mut out = GcaElement::zero();
        for (m, c) in e.terms() {
            let dm = self.differential_monomial(m)?;
            out = out.add(&dm.scale(c));
        }
        Ok(out)
    }

    fn differential_monomial(&self, m: &Monomial) -> Result<GcaElement> {
        let factors = m.factors();
        let mut out = GcaElement::zero();
        let mut prefix_degree = 0usize;
        for (t, &(id, e)) in factors.iter().enumerate() {
            let dg = &self.d_gen[id];
            if !dg.is_zero() {
                // d(g^e) = e g^(e-1) dg
                let gdeg = self.generators[id].degree;
                let prefix = Monomial::from_factors(factors[..t].to_vec());
                let mut mid_factors = factors[t..=t].to_vec();
                mid_factors[0].1 = e - 1;
                let mid = Monomial::from_factors(mid_factors);
                let suffix = Monomial::from_factors(factors[t + 1..].to_vec());
                let mut term = GcaElement::term(prefix, Scalar::one());
                term = self.multiply(&term, &GcaElement::term(mid, Scalar::from_int(e as i64)))?;
                term = self.multiply(&term, dg)?;
                term = self.multiply(&term, &GcaElement::term(suffix, Scalar::one()))?;
                // sign (-1)^(degree of everything left of the factor being hit)
                let sign_deg = prefix_degree + gdeg * (e as usize - 1);
                if sign_deg % 2 == 1 {
                    term = term.neg();
                }
                out = out.add(&term);
            }
            prefix_degree += self.generators[id].degree * e as usize;
        }
        Ok(out)
    }

    /// Generators on which d(d(g)) != 0. Empty means the algebra is a complex.
    pub fn d_squared_violations(&self) -> Result<Vec<GenId>> {
        let mut bad = Vec::new();
        for g in &self.generators {
            let ddg = self.differential(&self.d_gen[g.id])?;
            if !ddg.is_zero() {
                bad.push(g.id);
            }
        }
        Ok(bad)
    }

    pub fn check_d_squared(&self) -> Result<()> {
        let bad = self.d_squared_violations()?;
        if bad.is_empty() {
            Ok(())
        } else {
            let names: Vec<_> = bad.iter().map(|&id| self.generators[id].name.clone()).collect();
            Err(Error::DSquared(names.join(", ")))
        }
    }

    /// All monomials of total degree k, in canonical (lexicographic) order.
    pub fn degree_slice(&self, k: usize) -> Vec<Monomial> {
        assert!(
            k <= self.truncation,
            "degree slice {k} beyond truncation {}",
            self.truncation
        );
        let mut out = Vec::new();
        let mut stack = Vec::new();
        self.enumerate_slice(0, k, &mut stack, &mut out);
        out.sort();
        out
    }

    fn enumerate_slice(
        &self,
        gen_from: usize,
        remaining: usize,
        stack: &mut Vec<(GenId, u32)>,
        out: &mut Vec<Monomial>,
    ) {
        if remaining == 0 {
            out.push(Monomial::from_factors(stack.clone()));
            return;
        }
        if gen_from >= self.generators.len() {
            return;
        }
        let g = &self.generators[gen_from];
        let max_e = if g.degree % 2 == 1 {
            1.min(remaining / g.degree)
        } else {
            remaining / g.degree
        };
        for e in (0..=max_e as u32).rev() {
            if e > 0 {
                stack.push((g.id, e));
            }
            self.enumerate_slice(gen_from + 1, remaining - g.degree * e as usize, stack, out);
            if e > 0 {
                stack.pop();
            }
        }
    }

    /// Coordinates of a homogeneous element over `degree_slice(k)`.
    pub fn coords(&self, e: &GcaElement, k: usize, slice: &[Monomial]) -> Result<Vector> {
        let index: BTreeMap<&Monomial, usize> =
            slice.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut v = vec![Scalar::zero(); slice.len()];
        for (m, c) in e.terms() {
            if self.monomial_degree(m) != k {
                return Err(Error::Internal(format!(
                    "coords: term of degree {} in a degree-{k} slice",
                    self.monomial_degree(m)
                )));
            }
            let i = index
                .get(m)
                .ok_or_else(|| Error::Internal("coords: monomial outside slice".into()))?;
            v[*i] = c.clone();
        }
        Ok(v)
    }

    pub fn element_from_coords(&self, coords: &[Scalar], slice: &[Monomial]) -> GcaElement {
        let mut e = GcaElement::zero();
        for (m, c) in slice.iter().zip(coords) {
            e.add_term(m.clone(), c);
        }
        e
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        if m.is_unit() {
            return "1".into();
        }
        let mut s = String::new();
        for (i, &(id, e)) in m.factors().iter().enumerate() {
            if i > 0 {
                s.push('*');
            }
            s.push_str(&self.generators[id].name);
            if e > 1 {
                let _ = write!(s, "^{e}");
            }
        }
        s
    }

    pub fn format_element(&self, e: &GcaElement) -> String {
        if e.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (m, c)) in e.terms().enumerate() {
            let (mag, negative) = match c {
                Scalar::Rational(r) if r < &num::BigRational::from_integer(0.into()) => {
                    (-c, true)
                }
                _ => (c.clone(), false),
            };
            if i == 0 {
                if negative {
                    s.push('-');
                }
            } else {
                s.push_str(if negative { " - " } else { " + " });
            }
            let coeff = mag.to_string();
            if m.is_unit() {
                s.push_str(&coeff);
            } else if mag.is_one() {
                s.push_str(&self.format_monomial(m));
            } else {
                let _ = write!(s, "{}*{}", coeff, self.format_monomial(m));
            }
        }
        s
    }
}
