//! Dense two-phase primal simplex over exact rationals.
//!
//! Pivoting follows Bland's rule (lowest-index entering column, lowest-index
//! leaving basic variable among ratio ties), which cannot cycle. Only what
//! the clique packing and covering programs need is supported: `<=` and `>=`
//! rows, nonnegative variables, maximization.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Le,
    Ge,
}

#[derive(Clone, Debug)]
pub struct Row {
    /// Sparse coefficients `(variable, value)`.
    pub coeffs: Vec<(usize, Rational)>,
    pub sense: Sense,
    pub rhs: Rational,
}

/// `maximize objective . x` subject to the rows and `x >= 0`.
#[derive(Clone, Debug)]
pub struct LinearProgram {
    pub num_vars: usize,
    pub objective: Vec<Rational>,
    pub rows: Vec<Row>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LpSolution {
    pub value: Rational,
    pub primal: Vec<Rational>,
    /// One multiplier per row: `>= 0` for `<=` rows, `<= 0` for `>=` rows,
    /// with `rhs . dual == value` at optimality.
    pub dual: Vec<Rational>,
    pub pivots: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal,
    Infeasible,
    Unbounded,
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    /// Reduced costs `d_j`, optimal when all are `>= 0`; last entry is the
    /// objective value.
    obj: Vec<Rational>,
    basis: Vec<usize>,
    width: usize,
    pivots: usize,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        for x in self.rows[r].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let pivot_row = std::mem::take(&mut self.rows[r]);
        let nonzero: Vec<usize> = (0..=self.width).filter(|&j| !pivot_row[j].is_zero()).collect();
        let eliminate = |row: &mut Vec<Rational>| {
            let factor = row[c].clone();
            if factor.is_zero() {
                return;
            }
            for &j in &nonzero {
                let delta = &factor * &pivot_row[j];
                row[j] -= delta;
            }
        };
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r {
                eliminate(row);
            }
        }
        eliminate(&mut self.obj);
        self.rows[r] = pivot_row;
        self.basis[r] = c;
        self.pivots += 1;
    }

    /// Runs Bland's-rule iterations over the columns `allowed` admits.
    /// Returns `false` if the program is unbounded.
    fn optimize(&mut self, allowed: impl Fn(usize) -> bool) -> bool {
        loop {
            let entering = (0..self.width).find(|&j| allowed(j) && self.obj[j].is_negative());
            let Some(c) = entering else { return true };
            let mut best: Option<(usize, Rational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[c].is_positive() {
                    continue;
                }
                let ratio = &row[self.width] / &row[c];
                let better = match &best {
                    None => true,
                    Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            match best {
                None => return false,
                Some((r, _)) => self.pivot(r, c),
            }
        }
    }
}

impl LinearProgram {
    pub fn new(num_vars: usize, objective: Vec<Rational>) -> Self {
        assert_eq!(objective.len(), num_vars);
        LinearProgram { num_vars, objective, rows: Vec::new() }
    }

    pub fn add_row(&mut self, coeffs: Vec<(usize, Rational)>, sense: Sense, rhs: Rational) {
        self.rows.push(Row { coeffs, sense, rhs });
    }

    pub fn solve(&self) -> Result<(LpOutcome, Option<LpSolution>)> {
        let n = self.num_vars;
        let m = self.rows.len();
        if let Some(bad) = self
            .rows
            .iter()
            .flat_map(|r| r.coeffs.iter())
            .find(|(j, _)| *j >= n)
        {
            return Err(Error::InvalidInput(format!("variable {} out of range", bad.0)));
        }

        // Normalize to rhs >= 0; a >= row with rhs 0 becomes a <= row.
        // `flipped[i]` records a negation, `slack_sign[i]` the sign of the
        // row's own slack (+1) or surplus (-1) column.
        let mut flipped = vec![false; m];
        let mut slack_sign = vec![1i32; m];
        let mut needs_artificial = vec![false; m];
        for (i, row) in self.rows.iter().enumerate() {
            let sense = match (row.sense, row.rhs.is_negative()) {
                (s, false) => s,
                (Sense::Le, true) => {
                    flipped[i] = true;
                    Sense::Ge
                }
                (Sense::Ge, true) => {
                    flipped[i] = true;
                    Sense::Le
                }
            };
            let sense = if sense == Sense::Ge && row.rhs.is_zero() {
                flipped[i] = !flipped[i];
                Sense::Le
            } else {
                sense
            };
            if sense == Sense::Ge {
                slack_sign[i] = -1;
                needs_artificial[i] = true;
            }
        }

        let art_cols: Vec<usize> = {
            let mut next = n + m;
            needs_artificial
                .iter()
                .map(|&a| {
                    if a {
                        next += 1;
                        next - 1
                    } else {
                        usize::MAX
                    }
                })
                .collect()
        };
        let width = n + m + needs_artificial.iter().filter(|&&a| a).count();
        let first_artificial = n + m;

        let mut rows = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        for (i, row) in self.rows.iter().enumerate() {
            let mut t = vec![Rational::zero(); width + 1];
            let sign = if flipped[i] { -Rational::one() } else { Rational::one() };
            for (j, a) in &row.coeffs {
                t[*j] += a * &sign;
            }
            t[width] = &row.rhs * &sign;
            t[n + i] = Rational::from_integer(slack_sign[i].into());
            if needs_artificial[i] {
                t[art_cols[i]] = Rational::one();
                basis.push(art_cols[i]);
            } else {
                basis.push(n + i);
            }
            rows.push(t);
        }

        let mut tab = Tableau {
            rows,
            obj: vec![Rational::zero(); width + 1],
            basis,
            width,
            pivots: 0,
        };

        if width > first_artificial {
            // Phase one: maximize minus the sum of artificials.
            for (i, row) in tab.rows.iter().enumerate() {
                if needs_artificial[i] {
                    for (o, x) in tab.obj[..first_artificial].iter_mut().zip(row) {
                        *o -= x;
                    }
                    tab.obj[width] -= &row[width];
                }
            }
            tab.optimize(|_| true);
            if tab.obj[width].is_negative() {
                return Ok((LpOutcome::Infeasible, None));
            }
            // Drive remaining (zero-valued) artificials out of the basis.
            for r in 0..m {
                if tab.basis[r] >= first_artificial {
                    if let Some(c) = (0..first_artificial).find(|&j| !tab.rows[r][j].is_zero()) {
                        tab.pivot(r, c);
                    }
                }
            }
        }

        // Phase two objective row: d_j = c_B B^-1 A_j - c_j.
        let cost = |j: usize| -> Rational {
            if j < n {
                self.objective[j].clone()
            } else {
                Rational::zero()
            }
        };
        let mut obj: Vec<Rational> = (0..=width)
            .map(|j| if j < width { -cost(j) } else { Rational::zero() })
            .collect();
        for (r, row) in tab.rows.iter().enumerate() {
            let cb = cost(tab.basis[r]);
            if cb.is_zero() {
                continue;
            }
            for j in 0..=width {
                if !row[j].is_zero() {
                    obj[j] += &cb * &row[j];
                }
            }
        }
        tab.obj = obj;
        if !tab.optimize(|j| j < first_artificial) {
            return Ok((LpOutcome::Unbounded, None));
        }

        let mut primal = vec![Rational::zero(); n];
        for (r, &b) in tab.basis.iter().enumerate() {
            if b < n {
                primal[b] = tab.rows[r][width].clone();
            }
        }
        let dual = (0..m)
            .map(|i| {
                let y = &tab.obj[n + i] * Rational::from_integer(slack_sign[i].into());
                if flipped[i] {
                    -y
                } else {
                    y
                }
            })
            .collect();
        let solution = LpSolution {
            value: tab.obj[width].clone(),
            primal,
            dual,
            pivots: tab.pivots,
        };
        Ok((LpOutcome::Optimal, Some(solution)))
    }
}

/// Parses `p/q` or an integer.
pub fn parse_rational(s: &str) -> Result<Rational> {
    s.trim()
        .parse::<Rational>()
        .map_err(|_| Error::parse(format!("{s:?}"), "not a rational of the form p/q"))
}
