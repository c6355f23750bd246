//! Thin builder over the interior-point conic solver.
//!
//! Programs are assembled row by row: first ordinary `<=` inequalities
//! (nonnegative cone), then exponential-cone triples. Each triple
//! `(s1, s2, s3)` of affine expressions must satisfy
//! `s2 * exp(s1 / s2) <= s3`, which with `s2 = 1` encodes constraints of
//! the form `exp(linear) <= linear`.

use crate::error::Error;
use clarabel::algebra::CscMatrix;
use clarabel::solver::{
    DefaultSettingsBuilder, DefaultSolver, ExponentialConeT, IPSolver, NonnegativeConeT,
    SolverStatus, SupportedConeT,
};

/// Outcome quality of a conic solve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveStatus {
    Optimal,
    NearOptimal,
    /// Iteration budget hit; the iterate is usable but not certified.
    IterLimit,
}

pub(crate) struct ConicSolution {
    pub x: Vec<f64>,
    pub status: SolveStatus,
    #[cfg_attr(not(test), allow(dead_code))]
    pub objective: f64,
}

/// An affine expression: sparse linear terms plus a constant.
pub(crate) type Affine = (Vec<(usize, f64)>, f64);

pub(crate) struct ConeProgram {
    num_vars: usize,
    objective: Vec<f64>,
    /// Linear coefficients per constraint row (the `A` in `Ax + s = b`).
    rows: Vec<Vec<(usize, f64)>>,
    rhs: Vec<f64>,
    num_nonneg: usize,
    num_exp: usize,
}

impl ConeProgram {
    pub fn new(num_vars: usize) -> Self {
        ConeProgram {
            num_vars,
            objective: vec![0.0; num_vars],
            rows: Vec::new(),
            rhs: Vec::new(),
            num_nonneg: 0,
            num_exp: 0,
        }
    }

    /// Sets the linear objective to minimize.
    pub fn set_objective(&mut self, terms: &[(usize, f64)]) {
        self.objective = vec![0.0; self.num_vars];
        for &(j, v) in terms {
            self.objective[j] += v;
        }
    }

    /// Adds `sum(terms) <= rhs`. Must precede all exponential cones so the
    /// nonnegative cone stays a contiguous leading block.
    pub fn add_ineq(&mut self, terms: &[(usize, f64)], rhs: f64) {
        assert_eq!(self.num_exp, 0, "inequalities must be added before exponential cones");
        self.rows.push(terms.to_vec());
        self.rhs.push(rhs);
        self.num_nonneg += 1;
    }

    /// Adds the constraint `s2 * exp(s1 / s2) <= s3` on three affine
    /// expressions of the variables.
    pub fn add_exp_cone(&mut self, exprs: [Affine; 3]) {
        for (terms, constant) in exprs {
            // s = b - A x, so the row negates the expression's coefficients.
            let row: Vec<(usize, f64)> = terms.iter().map(|&(j, v)| (j, -v)).collect();
            self.rows.push(row);
            self.rhs.push(constant);
        }
        self.num_exp += 1;
    }

    #[cfg_attr(not(test), allow(dead_code))]
    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_nonneg_rows(&self) -> usize {
        self.num_nonneg
    }

    pub fn num_exp_cones(&self) -> usize {
        self.num_exp
    }

    fn build_matrix(&self) -> CscMatrix<f64> {
        let num_rows = self.rows.len();
        let mut triplets: Vec<(usize, usize, f64)> = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            for &(j, v) in row {
                debug_assert!(j < self.num_vars, "column {j} out of range");
                if v != 0.0 {
                    triplets.push((j, i, v));
                }
            }
        }
        triplets.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));

        // Merge duplicate (col, row) entries left by repeated terms.
        let mut merged: Vec<(usize, usize, f64)> = Vec::with_capacity(triplets.len());
        for (j, i, v) in triplets {
            match merged.last_mut() {
                Some(last) if last.0 == j && last.1 == i => last.2 += v,
                _ => merged.push((j, i, v)),
            }
        }

        let mut colptr = Vec::with_capacity(self.num_vars + 1);
        let mut rowval = Vec::with_capacity(merged.len());
        let mut nzval: Vec<f64> = Vec::with_capacity(merged.len());
        colptr.push(0);
        let mut col = 0usize;
        for (j, i, v) in merged {
            while col < j {
                colptr.push(rowval.len());
                col += 1;
            }
            rowval.push(i);
            nzval.push(v);
        }
        while col < self.num_vars {
            colptr.push(rowval.len());
            col += 1;
        }
        CscMatrix::new(num_rows, self.num_vars, colptr, rowval, nzval)
    }

    /// Runs the interior-point solver. Infeasible or numerically failed
    /// programs are errors; iteration-limited iterates are returned as
    /// best-effort solutions.
    pub fn solve(self) -> Result<ConicSolution, Error> {
        let p = CscMatrix::<f64>::zeros((self.num_vars, self.num_vars));
        let a = self.build_matrix();
        let mut cones: Vec<SupportedConeT<f64>> = Vec::new();
        if self.num_nonneg > 0 {
            cones.push(NonnegativeConeT(self.num_nonneg));
        }
        cones.extend((0..self.num_exp).map(|_| ExponentialConeT()));

        let settings = DefaultSettingsBuilder::default()
            .verbose(false)
            .build()
            .map_err(|e| Error::SolverFailure(format!("bad solver settings: {e:?}")))?;
        let mut solver = DefaultSolver::new(&p, &self.objective, &a, &self.rhs, &cones, settings)
            .map_err(|e| Error::SolverFailure(format!("solver rejected the program: {e:?}")))?;
        solver.solve();

        let status = match solver.solution.status {
            SolverStatus::Solved => SolveStatus::Optimal,
            SolverStatus::AlmostSolved => SolveStatus::NearOptimal,
            SolverStatus::MaxIterations | SolverStatus::InsufficientProgress => {
                SolveStatus::IterLimit
            }
            other => {
                return Err(Error::SolverFailure(format!(
                    "conic subproblem ended with status {other:?}"
                )))
            }
        };
        Ok(ConicSolution {
            x: solver.solution.x.clone(),
            status,
            objective: solver.solution.obj_val,
        })
    }
}
