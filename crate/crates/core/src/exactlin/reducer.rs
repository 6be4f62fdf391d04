use super::scalar::Scalar;

/// Incremental row reduction: rows are fed one at a time and the pivot rows
/// are kept fully reduced against each other.
#[derive(Clone, Debug)]
pub struct RowReducer<S> {
    cols: usize,
    // (pivot column, row with a 1 there and 0 in every other pivot column)
    pivots: Vec<(usize, Vec<S>)>,
}

impl<S: Scalar> RowReducer<S> {
    pub fn new(cols: usize) -> RowReducer<S> {
        RowReducer { cols, pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_full(&self) -> bool {
        self.pivots.len() == self.cols
    }

    fn reduce(&self, row: &mut [S]) {
        for (c, p) in &self.pivots {
            let f = row[*c].clone();
            if f.is_zero() {
                continue;
            }
            for (x, y) in row.iter_mut().zip(p) {
                if !y.is_zero() {
                    *x = x.clone() - f.clone() * y.clone();
                }
            }
        }
    }

    /// Whether `row` lies in the span of the rows inserted so far.
    pub fn contains(&self, row: &[S]) -> bool {
        let mut r = row.to_vec();
        self.reduce(&mut r);
        r.iter().all(|x| x.is_zero())
    }

    /// Adds a row; returns `true` when the rank went up.
    pub fn insert(&mut self, mut row: Vec<S>) -> bool {
        assert_eq!(row.len(), self.cols, "row length does not match");
        self.reduce(&mut row);
        let Some(c) = row.iter().position(|x| !x.is_zero()) else { return false };
        let inv = row[c].inv().unwrap();
        for x in row.iter_mut() {
            if !x.is_zero() {
                *x = x.clone() * inv.clone();
            }
        }
        for (_, p) in self.pivots.iter_mut() {
            let f = p[c].clone();
            if f.is_zero() {
                continue;
            }
            for (x, y) in p.iter_mut().zip(&row) {
                if !y.is_zero() {
                    *x = x.clone() - f.clone() * y.clone();
                }
            }
        }
        let at = self.pivots.partition_point(|(pc, _)| *pc < c);
        self.pivots.insert(at, (c, row));
        true
    }

    pub fn rows(&self) -> Vec<Vec<S>> {
        self.pivots.iter().map(|(_, r)| r.clone()).collect()
    }
}
