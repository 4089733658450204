//! Three independent implementations of `b^nu_{lambda,mu}` used to certify
//! the constructed-tableau rule: monomial expansion of P-Schur products,
//! rectification counting, and insertion completion.

use crate::analysis::{barely_yamanouchi_sequence, barely_yamanouchi_tableau};
use crate::insertion::{mixed_insert_word_into, rectify};
use crate::lr::{self, interval_system};
use crate::partition::{strict_partitions_of, StrictPartition};
use crate::shape::SkewShape;
use crate::tableau::{for_each_standard_skew, for_each_tableau, FillConstraint, ShiftedTableau};
use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

/// A finite multivariate polynomial in a fixed number of variables, keyed by
/// exponent vectors; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseSymmetricPolynomial {
    n_vars: usize,
    terms: BTreeMap<Vec<u32>, i64>,
}

impl SparseSymmetricPolynomial {
    pub fn zero(n_vars: usize) -> Self {
        SparseSymmetricPolynomial { n_vars, terms: BTreeMap::new() }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, i64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient_sum(&self) -> i64 {
        self.terms.values().sum()
    }

    fn add_term(&mut self, exponents: Vec<u32>, coefficient: i64) {
        debug_assert_eq!(exponents.len(), self.n_vars);
        if coefficient == 0 {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(exponents) {
            Entry::Vacant(e) => {
                e.insert(coefficient);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coefficient;
                if *e.get() == 0 {
                    e.remove();
                }
            }
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n_vars, other.n_vars);
        let mut out = SparseSymmetricPolynomial::zero(self.n_vars);
        for (ea, &ca) in &self.terms {
            for (eb, &cb) in &other.terms {
                let exponents: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exponents, ca * cb);
            }
        }
        out
    }

    /// `self -= c * other`.
    pub fn sub_scaled(&mut self, other: &Self, c: i64) {
        for (e, &co) in &other.terms {
            self.add_term(e.clone(), -c * co);
        }
    }

    /// Lexicographically largest exponent vector with its coefficient.
    pub fn leading(&self) -> Option<(&Vec<u32>, i64)> {
        self.terms.iter().next_back().map(|(e, &c)| (e, c))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    /// `n < l(lambda)`: the truncation would be identically zero.
    TooFewVariables { needed: usize, given: usize },
    /// The triangular elimination failed: the expansion is inconsistent with
    /// the P-basis (a non-strict leading exponent, a negative coefficient, or
    /// a nonzero remainder). Always a build-stopping bug.
    Inconsistent,
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::TooFewVariables { needed, given } => {
                write!(f, "need at least {} variables, got {}", needed, given)
            }
            OracleError::Inconsistent => write!(f, "monomial elimination failed: internal inconsistency"),
        }
    }
}

/// `P_lambda` truncated to `n` variables: the sum of content monomials over
/// all shifted tableaux of shape `lambda` with entries of value at most `n`.
pub fn p_polynomial(lambda: &StrictPartition, n: usize) -> Result<SparseSymmetricPolynomial, OracleError> {
    if n < lambda.len() {
        return Err(OracleError::TooFewVariables { needed: lambda.len(), given: n });
    }
    let mut poly = SparseSymmetricPolynomial::zero(n);
    for_each_tableau(lambda, &FillConstraint::MaxValue(n as u32), &mut |t| {
        let mut exponents = alloc::vec![0u32; n];
        for (i, &c) in t.content().counts().iter().enumerate() {
            exponents[i] = c;
        }
        poly.add_term(exponents, 1);
    });
    Ok(poly)
}

/// The smallest variable count making the P-basis triangular at this degree:
/// the maximum length of a strict partition of `size`.
pub fn variables_for_degree(size: u64) -> usize {
    let mut k = 0u64;
    while (k + 1) * (k + 2) / 2 <= size {
        k += 1;
    }
    k as usize
}

/// Monomial-expansion oracle with memoized P-polynomials.
#[derive(Default)]
pub struct MonomialOracle {
    polys: BTreeMap<(StrictPartition, usize), SparseSymmetricPolynomial>,
}

impl MonomialOracle {
    pub fn new() -> Self {
        Self::default()
    }

    fn poly(&mut self, lambda: &StrictPartition, n: usize) -> Result<SparseSymmetricPolynomial, OracleError> {
        if let Some(p) = self.polys.get(&(lambda.clone(), n)) {
            return Ok(p.clone());
        }
        let p = p_polynomial(lambda, n)?;
        self.polys.insert((lambda.clone(), n), p.clone());
        Ok(p)
    }

    /// Expand `P_lambda P_mu` over the P-basis by dominance-ordered
    /// leading-monomial elimination; the remainder must reach zero.
    pub fn expand(
        &mut self,
        lambda: &StrictPartition,
        mu: &StrictPartition,
    ) -> Result<Vec<(StrictPartition, u64)>, OracleError> {
        let size = lambda.size() + mu.size();
        if size == 0 {
            return Ok(alloc::vec![(StrictPartition::empty(), 1)]);
        }
        let n = variables_for_degree(size).max(lambda.len()).max(mu.len());
        let mut product = self.poly(lambda, n)?.mul(&self.poly(mu, n)?);
        let mut expansion = Vec::new();
        while let Some((exponents, coefficient)) = product.leading().map(|(e, c)| (e.clone(), c)) {
            let mut parts = exponents.clone();
            while parts.last() == Some(&0) {
                parts.pop();
            }
            let nu = StrictPartition::new(parts).map_err(|_| OracleError::Inconsistent)?;
            if coefficient < 0 {
                return Err(OracleError::Inconsistent);
            }
            let p_nu = self.poly(&nu, n)?;
            product.sub_scaled(&p_nu, coefficient);
            expansion.push((nu, coefficient as u64));
        }
        Ok(expansion)
    }

    pub fn coefficient(
        &mut self,
        lambda: &StrictPartition,
        mu: &StrictPartition,
        nu: &StrictPartition,
    ) -> Result<u64, OracleError> {
        if lambda.size() + mu.size() != nu.size() {
            return Ok(0);
        }
        let expansion = self.expand(lambda, mu)?;
        Ok(expansion.iter().find(|(p, _)| p == nu).map_or(0, |&(_, b)| b))
    }
}

/// One-shot monomial oracle.
pub fn coeff_by_monomials(
    lambda: &StrictPartition,
    mu: &StrictPartition,
    nu: &StrictPartition,
) -> Result<u64, OracleError> {
    MonomialOracle::new().coefficient(lambda, mu, nu)
}

/// Conservation of monomials: the coefficient sum of `P_lambda P_mu` equals
/// `sum_nu b * |shTab(nu, n)|` over the computed expansion.
pub fn monomial_conservation_holds(lambda: &StrictPartition, mu: &StrictPartition) -> Result<bool, OracleError> {
    let size = lambda.size() + mu.size();
    if size == 0 {
        return Ok(true);
    }
    let n = variables_for_degree(size).max(lambda.len()).max(mu.len());
    let mut oracle = MonomialOracle::new();
    let product = oracle.poly(lambda, n)?.mul(&oracle.poly(mu, n)?);
    let expansion = oracle.expand(lambda, mu)?;
    let mut mass = 0i64;
    for (nu, b) in &expansion {
        mass += *b as i64 * oracle.poly(nu, n)?.coefficient_sum();
    }
    Ok(mass == product.coefficient_sum())
}

/// Count standard fillings of `nu/mu` whose rectification equals `target`,
/// exploring at most `cap` fillings when given. Returns `(matches, explored,
/// completed)`.
pub fn rectification_scan(
    target: &ShiftedTableau,
    mu: &StrictPartition,
    nu: &StrictPartition,
    cap: Option<u64>,
) -> (u64, u64, bool) {
    let Ok(skew) = SkewShape::new(nu.clone(), mu.clone()) else {
        return (0, 0, true);
    };
    let mut matches = 0u64;
    let mut explored = 0u64;
    let mut complete = true;
    for_each_standard_skew(&skew, &mut |filling| {
        if cap.is_some_and(|c| explored >= c) {
            complete = false;
            return false;
        }
        explored += 1;
        if &rectify(filling) == target {
            matches += 1;
        }
        true
    });
    (matches, explored, complete)
}

/// Rectification oracle: fillings of `nu/mu` rectifying to the canonical
/// standard tableau of shape `lambda`.
pub fn coeff_by_rectification(lambda: &StrictPartition, mu: &StrictPartition, nu: &StrictPartition) -> u64 {
    if lambda.size() + mu.size() != nu.size() || !nu.contains(mu) {
        return 0;
    }
    let target = ShiftedTableau::canonical_standard(lambda);
    rectification_scan(&target, mu, nu, None).0
}

/// Same count against a caller-chosen standard target (the result must not
/// depend on the choice).
pub fn coeff_by_rectification_target(
    target: &ShiftedTableau,
    mu: &StrictPartition,
    nu: &StrictPartition,
) -> u64 {
    rectification_scan(target, mu, nu, None).0
}

/// Completion oracle: tableaux of shape `lambda` with the interval-system
/// content of `(mu, nu)` whose mixed insertion of `y_mu` reaches `Y_nu`.
pub fn coeff_by_completion(lambda: &StrictPartition, mu: &StrictPartition, nu: &StrictPartition) -> u64 {
    if lambda.size() + mu.size() != nu.size() {
        return 0;
    }
    let Ok(system) = interval_system(mu, nu) else { return 0 };
    let content = system.content();
    let y_mu = barely_yamanouchi_sequence(mu);
    let y_nu = barely_yamanouchi_tableau(nu);
    let mut count = 0u64;
    for_each_tableau(lambda, &FillConstraint::ExactContent(content), &mut |t| {
        if mixed_insert_word_into(t, &y_mu) == y_nu {
            count += 1;
        }
    });
    count
}

/// Which oracles a verification run should consult.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleSelection {
    pub monomial: bool,
    pub rectification: bool,
    pub completion: bool,
}

impl Default for OracleSelection {
    fn default() -> Self {
        OracleSelection { monomial: true, rectification: true, completion: true }
    }
}

/// Per-triple verification record.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyRecord {
    pub lambda: StrictPartition,
    pub mu: StrictPartition,
    pub nu: StrictPartition,
    pub new_rule: u64,
    pub monomial: Option<u64>,
    pub rectification: Option<u64>,
    pub completion: Option<u64>,
    pub agree: bool,
}

/// Compare the constructed-tableau rule against the selected oracles on one
/// triple.
pub fn verify_triple(
    lambda: &StrictPartition,
    mu: &StrictPartition,
    nu: &StrictPartition,
    selection: OracleSelection,
    oracle: &mut MonomialOracle,
) -> Result<VerifyRecord, OracleError> {
    let new_rule = lr::coefficient(lambda, mu, nu);
    let monomial = selection.monomial.then(|| oracle.coefficient(lambda, mu, nu)).transpose()?;
    let rectification = selection.rectification.then(|| coeff_by_rectification(lambda, mu, nu));
    let completion = selection.completion.then(|| coeff_by_completion(lambda, mu, nu));
    let agree = [monomial, rectification, completion]
        .iter()
        .all(|v| v.is_none() || *v == Some(new_rule));
    Ok(VerifyRecord {
        lambda: lambda.clone(),
        mu: mu.clone(),
        nu: nu.clone(),
        new_rule,
        monomial,
        rectification,
        completion,
        agree,
    })
}

/// Every triple `(lambda, mu, nu)` of strict partitions with
/// `|lambda| + |mu| = |nu|` and `|nu| <= max_size`, in deterministic order.
pub fn all_triples(max_size: u32) -> Vec<(StrictPartition, StrictPartition, StrictPartition)> {
    let mut out = Vec::new();
    for size in 0..=max_size {
        for nu in strict_partitions_of(size) {
            for a in 0..=size {
                for lambda in strict_partitions_of(a) {
                    for mu in strict_partitions_of(size - a) {
                        out.push((lambda.clone(), mu.clone(), nu.clone()));
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(parts: &[u32]) -> StrictPartition {
        StrictPartition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn p_polynomials_by_hand() {
        // P_(2) in 2 variables: x^2 + 2xy + y^2.
        let p = p_polynomial(&sp(&[2]), 2).unwrap();
        assert_eq!(p.terms().get(&alloc::vec![2, 0]), Some(&1));
        assert_eq!(p.terms().get(&alloc::vec![1, 1]), Some(&2));
        assert_eq!(p.terms().get(&alloc::vec![0, 2]), Some(&1));
        // P_(2,1) in 2 variables: x^2 y + x y^2.
        let p = p_polynomial(&sp(&[2, 1]), 2).unwrap();
        assert_eq!(p.terms().get(&alloc::vec![2, 1]), Some(&1));
        assert_eq!(p.terms().get(&alloc::vec![1, 2]), Some(&1));
        assert_eq!(p.terms().len(), 2);
        // P_(1) in 1 variable: x.
        let p = p_polynomial(&sp(&[1]), 1).unwrap();
        assert_eq!(p.terms().get(&alloc::vec![1]), Some(&1));
        assert!(p_polynomial(&sp(&[2, 1]), 1).is_err());
    }

    #[test]
    fn monomial_oracle_basics() {
        assert_eq!(coeff_by_monomials(&sp(&[1]), &sp(&[1]), &sp(&[2])).unwrap(), 1);
        assert_eq!(
            coeff_by_monomials(&sp(&[3, 1]), &StrictPartition::empty(), &sp(&[3, 1])).unwrap(),
            1
        );
        // P_(3) P_(1) = P_(4) + P_(3,1).
        let mut oracle = MonomialOracle::new();
        let expansion = oracle.expand(&sp(&[3]), &sp(&[1])).unwrap();
        assert_eq!(expansion, alloc::vec![(sp(&[4]), 1), (sp(&[3, 1]), 1)]);
        assert!(monomial_conservation_holds(&sp(&[3]), &sp(&[1])).unwrap());
        assert!(monomial_conservation_holds(&sp(&[2, 1]), &sp(&[2])).unwrap());
    }

    #[test]
    fn rectification_oracle_basics() {
        assert_eq!(coeff_by_rectification(&sp(&[1]), &sp(&[1]), &sp(&[2])), 1);
        let by_mono = coeff_by_monomials(&sp(&[2, 1]), &sp(&[1]), &sp(&[3, 1])).unwrap();
        assert_eq!(coeff_by_rectification(&sp(&[2, 1]), &sp(&[1]), &sp(&[3, 1])), by_mono);
    }

    #[test]
    fn completion_oracle_basics() {
        for parts in [&[2u32][..], &[3, 1], &[4, 2]] {
            let nu = sp(parts);
            assert_eq!(coeff_by_completion(&nu, &StrictPartition::empty(), &nu), 1);
        }
        assert_eq!(coeff_by_completion(&sp(&[1]), &sp(&[1]), &sp(&[2])), 1);
    }

    #[test]
    fn verify_triple_agrees_on_small_cases() {
        let mut oracle = MonomialOracle::new();
        for (l, m, n) in [(&[1u32][..], &[1u32][..], &[2u32][..]), (&[2, 1], &[1], &[3, 1]), (&[2], &[2], &[3, 1])] {
            let rec = verify_triple(
                &sp(l),
                &StrictPartition::new(m.to_vec()).unwrap(),
                &sp(n),
                OracleSelection::default(),
                &mut oracle,
            )
            .unwrap();
            assert!(rec.agree, "{:?}", rec);
        }
    }
}
