//! Two-phase dense-tableau primal simplex with Bland's rule, kept fully
//! independent of the vertex-enumeration path so the two solvers can
//! cross-check each other. The instances here are tiny (two structural
//! variables, a handful of rows), so a dense tableau is the whole story.

use crate::error::Error;
use crate::geometry::Vector2;
use crate::lp::LinearForm;
use crate::polytope::HalfspaceSystem;

enum Status {
    Optimal,
    Unbounded,
}

struct Tableau {
    rows: Vec<Vec<f64>>,
    rhs: Vec<f64>,
    cost: Vec<f64>,
    basis: Vec<usize>,
    tol: f64,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let piv = self.rows[r][c];
        debug_assert!(piv.abs() > 0.0, "pivot on a zero entry");
        for v in &mut self.rows[r] {
            *v /= piv;
        }
        self.rows[r][c] = 1.0;
        self.rhs[r] /= piv;
        let pivot_row = self.rows[r].clone();
        let pivot_rhs = self.rhs[r];
        for i in 0..self.rows.len() {
            if i == r {
                continue;
            }
            let factor = self.rows[i][c];
            if factor == 0.0 {
                continue;
            }
            for (v, p) in self.rows[i].iter_mut().zip(&pivot_row) {
                *v -= factor * p;
            }
            self.rows[i][c] = 0.0;
            self.rhs[i] -= factor * pivot_rhs;
        }
        let factor = self.cost[c];
        if factor != 0.0 {
            for (v, p) in self.cost.iter_mut().zip(&pivot_row) {
                *v -= factor * p;
            }
            self.cost[c] = 0.0;
        }
        self.basis[r] = c;
    }

    /// Installs the reduced costs of objective `q` under the current
    /// basis; requires the tableau to be in canonical form (it always is
    /// between pivots).
    fn install_cost(&mut self, q: &[f64]) {
        let mut cost = q.to_vec();
        for (i, &b) in self.basis.iter().enumerate() {
            let qb = q[b];
            if qb == 0.0 {
                continue;
            }
            for (v, a) in cost.iter_mut().zip(&self.rows[i]) {
                *v -= qb * a;
            }
        }
        self.cost = cost;
    }

    /// Minimizes the installed cost. Bland's rule throughout: enter the
    /// lowest-index improving column, leave by minimum ratio with ties
    /// broken toward the lowest basis index, so degenerate instances
    /// cannot cycle.
    fn run(&mut self) -> Status {
        // Bland's rule terminates; the cap only guards against tolerance
        // pathologies turning into an infinite loop.
        let cap = 1000 + 100 * (self.rows.len() + self.cost.len());
        for _ in 0..cap {
            let Some(enter) = (0..self.cost.len()).find(|&j| self.cost[j] < -self.tol) else {
                return Status::Optimal;
            };
            let mut best: Option<(usize, f64)> = None;
            for i in 0..self.rows.len() {
                let a = self.rows[i][enter];
                if a <= self.tol {
                    continue;
                }
                let ratio = self.rhs[i] / a;
                let better = match best {
                    None => true,
                    Some((lead, r)) => {
                        let tie = self.tol * (1.0 + ratio.abs().max(r.abs()));
                        ratio < r - tie || (ratio <= r + tie && self.basis[i] < self.basis[lead])
                    }
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            match best {
                Some((leave, _)) => self.pivot(leave, enter),
                None => return Status::Unbounded,
            }
        }
        panic!("simplex exceeded {cap} pivots; numerical cycling");
    }

    /// Values of the first `n` variables in the current basic solution.
    fn solution(&self, n: usize) -> Vec<f64> {
        let mut y = vec![0.0; n];
        for (i, &b) in self.basis.iter().enumerate() {
            if b < n {
                y[b] = self.rhs[i];
            }
        }
        y
    }
}

/// Maximizes `⟨c, x⟩` over the system's feasible region and returns an
/// optimal point with the optimal value. When the maximum is attained on a
/// whole edge, any optimal vertex may be returned.
///
/// With the nonnegativity flag off, each decision variable is split into a
/// difference of two nonnegative parts before entering the tableau.
pub fn simplex_solve(
    system: &HalfspaceSystem,
    objective: LinearForm,
) -> Result<(Vector2, f64), Error> {
    let split = !system.include_nonnegativity();
    let (c1, c2) = (objective.c1(), objective.c2());
    let obj: Vec<f64> = if split {
        vec![c1, c2, -c1, -c2]
    } else {
        vec![c1, c2]
    };
    let n = obj.len();
    let user = system.rows();
    let m = user.len();

    let mut mag = 1.0f64;
    for r in user {
        mag = mag.max(r.a1.abs()).max(r.a2.abs()).max(r.b.abs());
    }
    mag = mag.max(c1.abs()).max(c2.abs());
    // Reduced-cost noise for these tiny dense tableaus is near machine
    // epsilon, so the threshold can sit far below the improvement that a
    // genuinely better vertex offers; a loose threshold here would make
    // the solver stop one vertex short on nearly-tied objectives.
    let tol = 1e-11 * mag;
    let feas_tol = 1e-8 * mag;

    // Columns: n structurals, m slacks, artificials appended for rows that
    // arrive with a negative right-hand side (those get negated so the rhs
    // stays nonnegative, which flips their slack to -1).
    let mut rows: Vec<Vec<f64>> = Vec::with_capacity(m);
    let mut rhs: Vec<f64> = Vec::with_capacity(m);
    let mut basis: Vec<usize> = vec![usize::MAX; m];
    let mut art_rows: Vec<usize> = Vec::new();
    for (i, r) in user.iter().enumerate() {
        let mut row = vec![0.0; n + m];
        if split {
            row[..4].copy_from_slice(&[r.a1, r.a2, -r.a1, -r.a2]);
        } else {
            row[..2].copy_from_slice(&[r.a1, r.a2]);
        }
        row[n + i] = 1.0;
        let mut b = r.b;
        if b < 0.0 {
            for v in &mut row {
                *v = -*v;
            }
            b = -b;
            art_rows.push(i);
        }
        rows.push(row);
        rhs.push(b);
    }
    let total = n + m + art_rows.len();
    for row in &mut rows {
        row.resize(total, 0.0);
    }
    for (k, &i) in art_rows.iter().enumerate() {
        rows[i][n + m + k] = 1.0;
        basis[i] = n + m + k;
    }
    for (i, b) in basis.iter_mut().enumerate() {
        if *b == usize::MAX {
            *b = n + i;
        }
    }

    let mut t = Tableau {
        rows,
        rhs,
        cost: Vec::new(),
        basis,
        tol,
    };

    if !art_rows.is_empty() {
        // Phase one: minimize the sum of artificials.
        let mut q1 = vec![0.0; total];
        for v in &mut q1[n + m..] {
            *v = 1.0;
        }
        t.install_cost(&q1);
        match t.run() {
            Status::Optimal => {}
            // The phase-one objective is bounded below by zero, so an
            // unbounded ray here can only be roundoff on an infeasible
            // instance.
            Status::Unbounded => return Err(Error::Infeasible),
        }
        let infeasibility: f64 = t
            .basis
            .iter()
            .zip(&t.rhs)
            .filter(|(b, _)| **b >= n + m)
            .map(|(_, r)| *r)
            .sum();
        if infeasibility > feas_tol {
            return Err(Error::Infeasible);
        }
        // Pivot leftover zero-valued artificials out of the basis; a row
        // offering no pivot is redundant and is dropped.
        let mut i = 0;
        while i < t.basis.len() {
            if t.basis[i] >= n + m {
                if let Some(j) = (0..n + m).find(|&j| t.rows[i][j].abs() > tol) {
                    t.pivot(i, j);
                } else {
                    t.rows.remove(i);
                    t.rhs.remove(i);
                    t.basis.remove(i);
                    continue;
                }
            }
            i += 1;
        }
        for row in &mut t.rows {
            row.truncate(n + m);
        }
    }

    // Phase two: maximize ⟨c, x⟩ by minimizing its negation.
    let mut q = vec![0.0; n + m];
    for (v, c) in q.iter_mut().zip(&obj) {
        *v = -c;
    }
    t.install_cost(&q);
    match t.run() {
        Status::Optimal => {}
        Status::Unbounded => return Err(Error::Unbounded),
    }

    let y = t.solution(n);
    let x = if split {
        Vector2::new(y[0] - y[2], y[1] - y[3])
    } else {
        Vector2::new(y[0], y[1])
    };
    Ok((x, objective.eval(x)))
}
