//! Dense exact-rational linear programming by two-phase simplex.
//!
//! Internal engine behind the piecewise-linear subspace minimization. Small
//! and deliberately simple: the tableaus here have at most a few hundred
//! cells. Bland's rule is used throughout, so the method terminates without
//! any anti-cycling heuristics.

use num_traits::{One, Signed, Zero};

use crate::rational::Ratio;

/// `sum coeffs[i] * x_i  (op)  rhs`
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Cmp {
    Le,
    Ge,
    Eq,
}

/// Minimization problem over variables with optional individual bounds.
#[derive(Clone, Debug, Default)]
pub(crate) struct Lp {
    /// Objective coefficients, one per variable.
    pub objective: Vec<Ratio>,
    /// `(lower, upper)` per variable; `None` means unbounded on that side.
    pub bounds: Vec<(Option<Ratio>, Option<Ratio>)>,
    pub rows: Vec<(Vec<Ratio>, Cmp, Ratio)>,
}

#[derive(Clone, Debug)]
#[allow(dead_code)] // `point` is read by integration consumers and tests
pub(crate) enum LpOutcome {
    Optimal { value: Ratio, point: Vec<Ratio> },
    Infeasible,
    Unbounded,
}

impl Lp {
    pub fn new(num_vars: usize) -> Self {
        Lp {
            objective: vec![Ratio::zero(); num_vars],
            bounds: vec![(None, None); num_vars],
            rows: Vec::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn add_row(&mut self, coeffs: Vec<Ratio>, cmp: Cmp, rhs: Ratio) {
        debug_assert_eq!(coeffs.len(), self.num_vars());
        self.rows.push((coeffs, cmp, rhs));
    }

    /// Solves the program exactly.
    #[allow(clippy::needless_range_loop)] // tableau columns are semantic indices
    pub fn solve(&self) -> LpOutcome {
        // Rewrite onto nonnegative variables. Each original variable becomes
        //   x = lo + y            (finite lower bound)
        //   x = hi - y            (finite upper bound only)
        //   x = y+ - y-           (free)
        // with an extra row y <= hi - lo when both bounds are finite.
        #[derive(Clone)]
        enum Subst {
            Shift(Ratio, usize),  // x = c + y_k
            Mirror(Ratio, usize), // x = c - y_k
            Split(usize, usize),  // x = y_a - y_b
        }
        let mut substs = Vec::with_capacity(self.num_vars());
        let mut ny = 0usize;
        let mut extra_rows: Vec<(usize, Ratio)> = Vec::new(); // y_k <= bound
        for (lo, hi) in &self.bounds {
            match (lo, hi) {
                (Some(lo), Some(hi)) => {
                    substs.push(Subst::Shift(lo.clone(), ny));
                    extra_rows.push((ny, hi - lo));
                    ny += 1;
                }
                (Some(lo), None) => {
                    substs.push(Subst::Shift(lo.clone(), ny));
                    ny += 1;
                }
                (None, Some(hi)) => {
                    substs.push(Subst::Mirror(hi.clone(), ny));
                    ny += 1;
                }
                (None, None) => {
                    substs.push(Subst::Split(ny, ny + 1));
                    ny += 2;
                }
            }
        }

        let translate = |coeffs: &[Ratio]| -> (Vec<Ratio>, Ratio) {
            // Returns (row over y, constant shift contributed by the bounds).
            let mut out = vec![Ratio::zero(); ny];
            let mut shift = Ratio::zero();
            for (c, s) in coeffs.iter().zip(&substs) {
                if c.is_zero() {
                    continue;
                }
                match s {
                    Subst::Shift(base, k) => {
                        out[*k] += c;
                        shift += c * base;
                    }
                    Subst::Mirror(base, k) => {
                        out[*k] -= c;
                        shift += c * base;
                    }
                    Subst::Split(a, b) => {
                        out[*a] += c;
                        out[*b] -= c;
                    }
                }
            }
            (out, shift)
        };

        // Equality rows over y with nonnegative rhs; slack columns appended.
        struct Row {
            coeffs: Vec<Ratio>,
            rhs: Ratio,
        }
        let mut rows: Vec<Row> = Vec::new();
        let mut num_slacks = 0usize;
        let mut slack_of_row: Vec<Option<(usize, Ratio)>> = Vec::new(); // (slack id, sign)
        for (coeffs, cmp, rhs) in &self.rows {
            let (ycoeffs, shift) = translate(coeffs);
            let rhs = rhs - shift;
            let slack_sign = match cmp {
                Cmp::Le => Some(Ratio::one()),
                Cmp::Ge => Some(-Ratio::one()),
                Cmp::Eq => None,
            };
            slack_of_row.push(slack_sign.map(|s| {
                let id = num_slacks;
                num_slacks += 1;
                (id, s)
            }));
            rows.push(Row {
                coeffs: ycoeffs,
                rhs,
            });
        }
        for (k, bound) in extra_rows {
            let mut coeffs = vec![Ratio::zero(); ny];
            coeffs[k] = Ratio::one();
            slack_of_row.push(Some({
                let id = num_slacks;
                num_slacks += 1;
                (id, Ratio::one())
            }));
            rows.push(Row { coeffs, rhs: bound });
        }

        let m = rows.len();
        let total = ny + num_slacks + m; // structural + slack + artificial
                                         // Tableau: one row per constraint over [y | slack | artificial | rhs].
        let mut t = vec![vec![Ratio::zero(); total + 1]; m];
        let mut basis = vec![0usize; m];
        for (r, row) in rows.iter().enumerate() {
            let negate = row.rhs.is_negative();
            for (k, c) in row.coeffs.iter().enumerate() {
                t[r][k] = if negate { -c.clone() } else { c.clone() };
            }
            if let Some((id, sign)) = &slack_of_row[r] {
                t[r][ny + id] = if negate { -sign.clone() } else { sign.clone() };
            }
            t[r][total] = row.rhs.abs();
            t[r][ny + num_slacks + r] = Ratio::one();
            basis[r] = ny + num_slacks + r;
        }

        let artificial_start = ny + num_slacks;

        // Phase 1: minimize the sum of artificials.
        let mut cost1 = vec![Ratio::zero(); total];
        for k in artificial_start..total {
            cost1[k] = Ratio::one();
        }
        let value1 = simplex_iterate(&mut t, &mut basis, &cost1, total, None);
        match value1 {
            Some(v) if v.is_zero() => {}
            _ => return LpOutcome::Infeasible,
        }

        // Drive remaining artificials out of the basis (or drop redundant
        // rows by leaving them basic at zero with all structural entries 0).
        for r in 0..m {
            if basis[r] >= artificial_start {
                if let Some(k) = (0..artificial_start).find(|&k| !t[r][k].is_zero()) {
                    pivot(&mut t, &mut basis, r, k, total);
                }
            }
        }

        // Phase 2 on the original objective (artificials barred).
        let mut cost2 = vec![Ratio::zero(); total];
        for (x_idx, s) in substs.iter().enumerate() {
            let c = &self.objective[x_idx];
            if c.is_zero() {
                continue;
            }
            match s {
                Subst::Shift(_, k) => cost2[*k] += c,
                Subst::Mirror(_, k) => cost2[*k] -= c,
                Subst::Split(a, b) => {
                    cost2[*a] += c;
                    cost2[*b] -= c;
                }
            }
        }
        let value2 = simplex_iterate(&mut t, &mut basis, &cost2, artificial_start, Some(total));
        let objective_shift: Ratio = self
            .objective
            .iter()
            .zip(&substs)
            .map(|(c, s)| match s {
                Subst::Shift(base, _) | Subst::Mirror(base, _) => c * base,
                Subst::Split(..) => Ratio::zero(),
            })
            .sum();
        match value2 {
            None => LpOutcome::Unbounded,
            Some(v) => {
                let mut y = vec![Ratio::zero(); total];
                for (r, &b) in basis.iter().enumerate() {
                    y[b] = t[r][total].clone();
                }
                let point = substs
                    .iter()
                    .map(|s| match s {
                        Subst::Shift(base, k) => base + &y[*k],
                        Subst::Mirror(base, k) => base - &y[*k],
                        Subst::Split(a, b) => y[*a].clone() - y[*b].clone(),
                    })
                    .collect();
                LpOutcome::Optimal {
                    value: v + objective_shift,
                    point,
                }
            }
        }
    }
}

/// Runs Bland-rule simplex minimizing `cost` over columns `0..cols`;
/// `rhs_col`, when given, is the tableau width (otherwise `cols` is also the
/// rhs). Returns the optimal value, or `None` when unbounded.
fn simplex_iterate(
    t: &mut [Vec<Ratio>],
    basis: &mut [usize],
    cost: &[Ratio],
    cols: usize,
    rhs_col: Option<usize>,
) -> Option<Ratio> {
    let m = t.len();
    let rhs = rhs_col.unwrap_or(cols);
    loop {
        // Reduced costs: c_k - c_B . B^-1 A_k, via the current tableau.
        let mut entering = None;
        for k in 0..cols {
            if basis.contains(&k) {
                continue;
            }
            let mut reduced = cost[k].clone();
            for r in 0..m {
                if !t[r][k].is_zero() && !cost[basis[r]].is_zero() {
                    reduced -= &cost[basis[r]] * &t[r][k];
                }
            }
            if reduced.is_negative() {
                entering = Some(k);
                break; // Bland: smallest eligible index
            }
        }
        let k = match entering {
            Some(k) => k,
            None => {
                let mut value = Ratio::zero();
                for r in 0..m {
                    if !cost[basis[r]].is_zero() {
                        value += &cost[basis[r]] * &t[r][rhs];
                    }
                }
                return Some(value);
            }
        };
        // Ratio test, ties by smallest basis index (Bland).
        let mut leaving: Option<(usize, Ratio)> = None;
        for r in 0..m {
            if t[r][k].is_positive() {
                let ratio = &t[r][rhs] / &t[r][k];
                let better = match &leaving {
                    None => true,
                    Some((lr, lratio)) => {
                        ratio < *lratio || (ratio == *lratio && basis[r] < basis[*lr])
                    }
                };
                if better {
                    leaving = Some((r, ratio));
                }
            }
        }
        let (r, _) = leaving?;
        pivot_full(t, basis, r, k, rhs);
    }
}

fn pivot(t: &mut [Vec<Ratio>], basis: &mut [usize], row: usize, col: usize, rhs: usize) {
    pivot_full(t, basis, row, col, rhs)
}

#[allow(clippy::needless_range_loop)]
fn pivot_full(t: &mut [Vec<Ratio>], basis: &mut [usize], row: usize, col: usize, rhs: usize) {
    let p = t[row][col].clone();
    debug_assert!(!p.is_zero());
    for c in 0..=rhs {
        t[row][c] = &t[row][c] / &p;
    }
    for r in 0..t.len() {
        if r != row && !t[r][col].is_zero() {
            let factor = t[r][col].clone();
            for c in 0..=rhs {
                let delta = &factor * &t[row][c];
                t[r][c] -= delta;
            }
        }
    }
    basis[row] = col;
}
