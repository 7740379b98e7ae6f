use std::fmt;

use super::Field;

/// Dense row-major matrix over a single field.
#[derive(Clone)]
pub struct ExactMatrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Element>,
}

impl<F: Field> fmt::Debug for ExactMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ExactMatrix")
            .field("rows", &self.rows)
            .field("cols", &self.cols)
            .finish_non_exhaustive()
    }
}

impl<F: Field> ExactMatrix<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        ExactMatrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    /// # Panics
    /// If `data.len() != rows * cols`.
    pub fn from_vec(field: &F, rows: usize, cols: usize, data: Vec<F::Element>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data has the wrong length");
        ExactMatrix { field: field.clone(), rows, cols, data }
    }

    /// Stacks rows of equal length `cols`.
    pub fn from_rows(field: &F, cols: usize, rows: impl IntoIterator<Item = Vec<F::Element>>) -> Self {
        let mut data = Vec::new();
        let mut count = 0;
        for row in rows {
            assert_eq!(row.len(), cols, "row {count} has the wrong length");
            data.extend(row);
            count += 1;
        }
        ExactMatrix { field: field.clone(), rows: count, cols, data }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &F::Element {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F::Element) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F::Element] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn push_row(&mut self, row: Vec<F::Element>) {
        assert_eq!(row.len(), self.cols);
        self.data.extend(row);
        self.rows += 1;
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        ExactMatrix { field: self.field.clone(), rows: self.cols, cols: self.rows, data }
    }

    /// Exact rank; zero for empty matrices.
    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        self.field.rank(self.rows, self.cols, self.data.clone())
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let f = &self.field;
        let (rows, cols) = (self.rows, self.cols);
        let mut a = self.data.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !f.is_zero(&a[i * cols + col])) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    a.swap(p * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(&a[r * cols + col]).expect("nonzero pivot");
            for j in col..cols {
                a[r * cols + j] = f.mul(&a[r * cols + j], &inv);
            }
            for i in 0..rows {
                if i == r || f.is_zero(&a[i * cols + col]) {
                    continue;
                }
                let factor = a[i * cols + col].clone();
                for j in col..cols {
                    let t = f.mul(&factor, &a[r * cols + j]);
                    a[i * cols + j] = f.sub(&a[i * cols + j], &t);
                }
            }
            pivots.push(col);
            r += 1;
        }
        (ExactMatrix { field: f.clone(), rows, cols, data: a }, pivots)
    }

    /// Basis of the right null space `{x : M x = 0}`, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<F::Element>> {
        let f = &self.field;
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = f.neg(r.get(i, free));
            }
            basis.push(v);
        }
        basis
    }

    /// Basis of the left null space `{y : y M = 0}`.
    pub fn left_kernel(&self) -> Vec<Vec<F::Element>> {
        self.transpose().kernel()
    }

    pub fn mul_vec(&self, v: &[F::Element]) -> Vec<F::Element> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| dot(&self.field, self.row(r), v))
            .collect()
    }
}

pub(crate) fn dot<F: Field>(field: &F, a: &[F::Element], b: &[F::Element]) -> F::Element {
    a.iter()
        .zip(b)
        .fold(field.zero(), |acc, (x, y)| field.add(&acc, &field.mul(x, y)))
}
