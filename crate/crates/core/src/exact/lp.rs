//! Dense two-phase simplex over the rationals with Bland's rule.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{primitive_integer, IntMatrix, Rational};

/// `minimize c.x  subject to  A x = b, x >= 0`.
#[derive(Debug, Clone)]
pub struct LinearProgram {
    pub a: Vec<Vec<Rational>>,
    pub b: Vec<Rational>,
    pub c: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Optimal {
        x: Vec<Rational>,
        value: Rational,
    },
    /// Farkas certificate: `y^T A <= 0` componentwise and `y^T b > 0`.
    Infeasible {
        farkas: Vec<Rational>,
    },
    Unbounded,
}

struct Tableau {
    /// rows of B^-1 [A | I]
    t: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
}

impl Tableau {
    fn pivot(&mut self, row: usize, col: usize) {
        let p = self.t[row][col].clone();
        for x in self.t[row].iter_mut() {
            *x /= &p;
        }
        self.rhs[row] /= &p;
        let prow = self.t[row].clone();
        let prhs = self.rhs[row].clone();
        for i in 0..self.t.len() {
            if i == row || self.t[i][col].is_zero() {
                continue;
            }
            let f = self.t[i][col].clone();
            for (x, y) in self.t[i].iter_mut().zip(&prow) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
            self.rhs[i] -= &f * &prhs;
        }
        self.basis[row] = col;
    }

    fn reduced_costs(&self, cost: &[Rational]) -> Vec<Rational> {
        (0..cost.len())
            .map(|j| {
                let mut r = cost[j].clone();
                for (i, &bi) in self.basis.iter().enumerate() {
                    if !cost[bi].is_zero() && !self.t[i][j].is_zero() {
                        r -= &cost[bi] * &self.t[i][j];
                    }
                }
                r
            })
            .collect()
    }

    /// Runs Bland's rule to optimality. Columns `>= allowed` never enter.
    /// Returns false when unbounded.
    fn optimise(&mut self, cost: &[Rational], allowed: usize) -> bool {
        loop {
            let r = self.reduced_costs(cost);
            let Some(enter) = (0..allowed).find(|&j| r[j].is_negative()) else {
                return true;
            };
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..self.t.len() {
                if self.t[i][enter].is_positive() {
                    let ratio = &self.rhs[i] / &self.t[i][enter];
                    let better = match &leave {
                        None => true,
                        Some((l, best)) => ratio < *best || (ratio == *best && self.basis[i] < self.basis[*l]),
                    };
                    if better {
                        leave = Some((i, ratio));
                    }
                }
            }
            match leave {
                Some((row, _)) => self.pivot(row, enter),
                None => return false,
            }
        }
    }
}

impl LinearProgram {
    pub fn solve(&self) -> LpOutcome {
        let m = self.a.len();
        let n = self.c.len();
        // row signs so that b >= 0
        let signs: Vec<Rational> =
            self.b.iter().map(|x| if x.is_negative() { -Rational::one() } else { Rational::one() }).collect();
        let mut t = Vec::with_capacity(m);
        for (i, (a, sign)) in self.a.iter().zip(&signs).enumerate() {
            let mut row: Vec<Rational> = a.iter().map(|x| x * sign).collect();
            row.extend((0..m).map(|k| if k == i { Rational::one() } else { Rational::zero() }));
            t.push(row);
        }
        let rhs: Vec<Rational> = self.b.iter().zip(&signs).map(|(x, s)| x * s).collect();
        let mut tab = Tableau { t, rhs, basis: (n..n + m).collect() };

        let phase1: Vec<Rational> =
            (0..n + m).map(|j| if j >= n { Rational::one() } else { Rational::zero() }).collect();
        tab.optimise(&phase1, n + m);
        let infeasibility: Rational =
            tab.basis.iter().zip(&tab.rhs).filter(|(&b, _)| b >= n).map(|(_, v)| v.clone()).sum();
        if infeasibility.is_positive() {
            // y' = c_B B^-1, where B^-1 sits in the artificial columns
            let farkas = (0..m)
                .map(|i| {
                    let y: Rational = tab
                        .basis
                        .iter()
                        .enumerate()
                        .filter(|(_, &b)| b >= n)
                        .map(|(k, _)| tab.t[k][n + i].clone())
                        .sum();
                    y * &signs[i]
                })
                .collect();
            return LpOutcome::Infeasible { farkas };
        }

        // push zero-level artificials out of the basis where possible
        for row in 0..m {
            if tab.basis[row] >= n {
                if let Some(col) = (0..n).find(|&j| !tab.t[row][j].is_zero()) {
                    tab.pivot(row, col);
                }
            }
        }
        let mut cost = self.c.clone();
        cost.extend((0..m).map(|_| Rational::zero()));
        if !tab.optimise(&cost, n) {
            return LpOutcome::Unbounded;
        }
        let mut x = vec![Rational::zero(); n];
        for (i, &b) in tab.basis.iter().enumerate() {
            if b < n {
                x[b] = tab.rhs[i].clone();
            }
        }
        let value = x.iter().zip(&self.c).map(|(a, b)| a * b).sum();
        LpOutcome::Optimal { x, value }
    }
}

/// The two mutually exclusive outcomes of Stiemke's alternative for the
/// columns `w_1..w_n` of an integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StiemkeAlternative {
    /// `sum lambda_i w_i = 0` with every `lambda_i >= 1`.
    Positive(Vec<Rational>),
    /// Primitive `v` with `<v, w_i> >= 0` for all `i` and `> 0` for some `i`.
    /// Strict on every column where any certificate can be strict.
    Certificate(Vec<BigInt>),
}

fn to_rational(m: &IntMatrix) -> Vec<Vec<Rational>> {
    m.to_rows().into_iter().map(|r| r.into_iter().map(Rational::from_integer).collect()).collect()
}

/// Decides Stiemke's alternative for the columns of `w`: either a strictly
/// positive (normalised to `>= 1`) balancing vector, or a separating `v`.
pub fn solve_positive_combination(w: &IntMatrix) -> StiemkeAlternative {
    let (d, n) = (w.rows(), w.cols());
    let a = to_rational(w);
    // lambda = 1 + mu, mu >= 0:  W mu = -W 1
    let b: Vec<Rational> = a.iter().map(|row| -row.iter().sum::<Rational>()).collect();
    let lp = LinearProgram { a: a.clone(), b, c: vec![Rational::one(); n] };
    match lp.solve() {
        LpOutcome::Optimal { x, .. } => {
            StiemkeAlternative::Positive(x.into_iter().map(|m| m + Rational::one()).collect())
        }
        LpOutcome::Unbounded => unreachable!("objective is bounded below by 0"),
        LpOutcome::Infeasible { farkas } => {
            let v: Vec<Rational> = farkas.iter().map(|y| -y).collect();
            let fallback = primitive_integer(&v);
            debug_assert!(is_certificate(w, &fallback));
            let balanced = balanced_certificate(&a, d, n);
            if is_certificate(w, &balanced) {
                StiemkeAlternative::Certificate(balanced)
            } else {
                StiemkeAlternative::Certificate(fallback)
            }
        }
    }
}

fn is_certificate(w: &IntMatrix, v: &[BigInt]) -> bool {
    let ips: Vec<BigInt> = (0..w.cols()).map(|j| super::dot(v, &w.column(j))).collect();
    ips.iter().all(|x| !x.is_negative()) && ips.iter().any(|x| x.is_positive())
}

/// Sum over columns `k` of the L1-minimal `v` with `<v, w_k> >= 1` and
/// `<v, w_j> >= 0` otherwise; a relative-interior point of the dual cone.
fn balanced_certificate(a: &[Vec<Rational>], d: usize, n: usize) -> Vec<BigInt> {
    let mut total = vec![Rational::zero(); d];
    for k in 0..n {
        // variables: p (d), q (d), s (n);  rows j: w_j.(p - q) - s_j = [j == k]
        let rows: Vec<Vec<Rational>> = (0..n)
            .map(|j| {
                let mut r: Vec<Rational> = (0..d).map(|i| a[i][j].clone()).collect();
                r.extend((0..d).map(|i| -&a[i][j]));
                r.extend((0..n).map(|l| if l == j { -Rational::one() } else { Rational::zero() }));
                r
            })
            .collect();
        let b = (0..n).map(|j| if j == k { Rational::one() } else { Rational::zero() }).collect();
        let c = (0..2 * d + n).map(|i| if i < 2 * d { Rational::one() } else { Rational::zero() }).collect();
        if let LpOutcome::Optimal { x, .. } = (LinearProgram { a: rows, b, c }).solve() {
            for i in 0..d {
                total[i] += &x[i] - &x[d + i];
            }
        }
    }
    primitive_integer(&total)
}
