//! Partitions, Kostka numbers, hook lengths and the predicted decomposition
//! of `G(R_n/K)` into irreducible `S_n`-representations.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A partition of n, parts weakly decreasing and positive.
///
/// Ordered reverse-lexicographically, so `(n)` sorts first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Accepts weakly decreasing parts; trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.is_empty() {
            return Err(Error::Parse(
                "a partition needs at least one positive part".into(),
            ));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::Parse(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn first(&self) -> usize {
        self.parts[0]
    }

    /// Column lengths of the diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = (0..self.first())
            .map(|j| self.parts.iter().filter(|&&p| p > j).count())
            .collect();
        Partition { parts: cols }
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other.parts.cmp(&self.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", body.join(","))
    }
}

/// All partitions of `n`, lexicographically decreasing.
pub fn partitions(n: usize) -> Vec<Partition> {
    assert!(n >= 1, "n must be positive");
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

fn same_size(a: &Partition, b: &Partition) -> Result<()> {
    if a.n() != b.n() {
        return Err(Error::SizeMismatch(a.n(), b.n()));
    }
    Ok(())
}

/// Whether every prefix sum of `mu` is at least the matching one of `lambda`.
pub fn dominates(mu: &Partition, lambda: &Partition) -> Result<bool> {
    same_size(mu, lambda)?;
    let (mut a, mut b) = (0, 0);
    for j in 0..mu.len().max(lambda.len()) {
        a += mu.parts.get(j).copied().unwrap_or(0);
        b += lambda.parts.get(j).copied().unwrap_or(0);
        if a < b {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Calls `visit` on every semistandard tableau of shape `mu` whose content
/// is `lambda` (`lambda[i]` copies of `i + 1`). Rows weakly increase,
/// columns strictly increase.
fn for_each_ssyt(lambda: &Partition, mu: &Partition, visit: &mut dyn FnMut(&[Vec<usize>])) {
    let mut rows: Vec<Vec<usize>> = mu.parts.iter().map(|&p| Vec::with_capacity(p)).collect();
    let mut left = lambda.parts.clone();
    fn fill(
        r: usize,
        mu: &Partition,
        rows: &mut Vec<Vec<usize>>,
        left: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[Vec<usize>]),
    ) {
        if r == mu.len() {
            visit(rows);
            return;
        }
        if rows[r].len() == mu.parts[r] {
            fill(r + 1, mu, rows, left, visit);
            return;
        }
        let c = rows[r].len();
        let lo = rows[r].last().copied().unwrap_or(1);
        let lo = if r > 0 {
            lo.max(rows[r - 1][c] + 1)
        } else {
            lo
        };
        for v in lo..=left.len() {
            if left[v - 1] == 0 {
                continue;
            }
            left[v - 1] -= 1;
            rows[r].push(v);
            fill(r, mu, rows, left, visit);
            rows[r].pop();
            left[v - 1] += 1;
        }
    }
    fill(0, mu, &mut rows, &mut left, visit);
}

/// Semistandard tableaux of shape `mu` and content `lambda`, as rows.
pub fn ssyt(lambda: &Partition, mu: &Partition) -> Result<Vec<Vec<Vec<usize>>>> {
    same_size(lambda, mu)?;
    let mut out = Vec::new();
    for_each_ssyt(lambda, mu, &mut |t| out.push(t.to_vec()));
    Ok(out)
}

/// Rows weakly increase and columns strictly increase.
pub fn is_semistandard(rows: &[Vec<usize>]) -> bool {
    let rows_ok = rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
    let cols_ok = rows
        .windows(2)
        .all(|w| w[1].len() <= w[0].len() && w[1].iter().zip(&w[0]).all(|(b, a)| a < b));
    rows_ok && cols_ok
}

/// `K_{λμ}`: the number of semistandard tableaux of shape `mu` and content
/// `lambda`.
pub fn kostka(lambda: &Partition, mu: &Partition) -> Result<u64> {
    same_size(lambda, mu)?;
    let mut count = 0u64;
    for_each_ssyt(lambda, mu, &mut |_| count += 1);
    Ok(count)
}

/// Hook numbers of each box, row by row.
pub fn hooks(mu: &Partition) -> Vec<Vec<usize>> {
    let conj = mu.conjugate();
    mu.parts
        .iter()
        .enumerate()
        .map(|(i, &p)| {
            (0..p)
                .map(|j| (p - j - 1) + (conj.parts[j] - i - 1) + 1)
                .collect()
        })
        .collect()
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// `dim V_μ = n! / ∏ hooks`.
pub fn hook_dim(mu: &Partition) -> Result<u64> {
    let h: u128 = hooks(mu).iter().flatten().map(|&x| x as u128).product();
    let f = factorial(mu.n());
    if !f.is_multiple_of(h) {
        return Err(Error::InexactDivision("hook formula"));
    }
    Ok((f / h) as u64)
}

/// The multinomial `(n-1)! / ∏ k_j!`, where `k_j` counts the entries equal
/// to `j` among positions `2..n` of `lambda` padded with zeros to length n.
pub fn m_lambda(lambda: &Partition) -> u64 {
    let n = lambda.n();
    let mut counts = vec![0usize; n + 1];
    for i in 1..n {
        counts[lambda.parts.get(i).copied().unwrap_or(0)] += 1;
    }
    let denom: u128 = counts.iter().map(|&k| factorial(k)).product();
    (factorial(n - 1) / denom) as u64
}

/// Dimension of the permutation module `Ind_{S_λ}^{S_n} 1 = n! / ∏ λ_i!`.
pub fn dim_m(lambda: &Partition) -> u64 {
    let denom: u128 = lambda.parts.iter().map(|&p| factorial(p)).product();
    (factorial(lambda.n()) / denom) as u64
}

fn dominating_terms(lambda: &Partition, keep: impl Fn(&Partition) -> bool) -> Result<u64> {
    let mut total = 0;
    for mu in partitions(lambda.n()) {
        if dominates(&mu, lambda)? && keep(&mu) {
            total += kostka(lambda, &mu)? * hook_dim(&mu)?;
        }
    }
    Ok(total)
}

/// Young's rule: `dim M_λ = Σ_{μ ⊵ λ} K_{λμ} dim V_μ`.
pub fn youngs_rule_check(lambda: &Partition) -> Result<bool> {
    Ok(dominating_terms(lambda, |_| true)? == dim_m(lambda))
}

/// `Σ_{μ ⊵ λ, μ_1 > λ_1} K_{λμ} dim V_μ`.
pub fn ideal_dim(lambda: &Partition) -> Result<u64> {
    dominating_terms(lambda, |mu| mu.first() > lambda.first())
}

/// `Σ_{μ ⊵ λ, μ_1 = λ_1} K_{λμ} dim V_μ`: the quotient dimension of one
/// content class of shape `lambda`.
pub fn quotient_dim(lambda: &Partition) -> Result<u64> {
    dominating_terms(lambda, |mu| mu.first() == lambda.first())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contribution {
    pub lambda: Partition,
    pub m_lambda: u64,
    pub kostka: u64,
}

impl Contribution {
    pub fn product(&self) -> u64 {
        self.m_lambda * self.kostka
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionRow {
    pub mu: Partition,
    pub dim: u64,
    pub contributions: Vec<Contribution>,
}

impl DecompositionRow {
    pub fn multiplicity(&self) -> u64 {
        self.contributions.iter().map(Contribution::product).sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionTable {
    pub n: usize,
    pub rows: Vec<DecompositionRow>,
}

impl DecompositionTable {
    pub fn total(&self) -> u64 {
        self.rows.iter().map(|r| r.multiplicity() * r.dim).sum()
    }

    pub fn row(&self, mu: &Partition) -> Option<&DecompositionRow> {
        self.rows.iter().find(|r| &r.mu == mu)
    }
}

impl fmt::Display for DecompositionTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:<14} {:>8}  {:<14} {:>8} {:>8} {:>10}",
            "mu", "dim V_mu", "lambda", "m_lambda", "K", "m_lambda*K"
        )?;
        for row in &self.rows {
            for (i, c) in row.contributions.iter().enumerate() {
                let (mu, dim) = if i == 0 {
                    (row.mu.to_string(), row.dim.to_string())
                } else {
                    (String::new(), String::new())
                };
                writeln!(
                    f,
                    "{:<14} {:>8}  {:<14} {:>8} {:>8} {:>10}",
                    mu,
                    dim,
                    c.lambda.to_string(),
                    c.m_lambda,
                    c.kostka,
                    c.product()
                )?;
            }
        }
        write!(f, "total {}", self.total())
    }
}

/// The multiplicity of each `V_μ` in `G(R_n/K)`: the sum over `λ` with
/// `λ_1 = μ_1` and `μ ⊵ λ` of `m_λ K_{λμ}`.
pub fn predicted_decomposition(n: usize) -> DecompositionTable {
    let all = partitions(n);
    let rows = all
        .iter()
        .map(|mu| {
            let contributions = all
                .iter()
                .filter(|lambda| lambda.first() == mu.first() && dominates(mu, lambda).unwrap())
                .map(|lambda| Contribution {
                    lambda: lambda.clone(),
                    m_lambda: m_lambda(lambda),
                    kostka: kostka(lambda, mu).unwrap(),
                })
                .collect();
            DecompositionRow {
                mu: mu.clone(),
                dim: hook_dim(mu).unwrap(),
                contributions,
            }
        })
        .collect();
    DecompositionTable { n, rows }
}

pub fn predicted_dimension(n: usize) -> u64 {
    predicted_decomposition(n).total()
}

/// Whether the regular representation sits inside the prediction, strictly
/// for n ≥ 4.
pub fn regular_subrep_check(n: usize) -> bool {
    let t = predicted_decomposition(n);
    let all_ge = t.rows.iter().all(|r| r.multiplicity() >= r.dim);
    let some_gt = t.rows.iter().any(|r| r.multiplicity() > r.dim);
    all_ge && (n < 4 || some_gt)
}
