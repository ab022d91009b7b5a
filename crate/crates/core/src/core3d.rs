//! Dense cubic matrices `a_ijk` of order 1 to 3.
//!
//! Positions are 1-based everywhere in the public API: `i` selects the
//! horizontal layer, `j` the vertical page and `k` the vertical layer.
//! Entries are stored k-major, then by `i`, then by `j`, so vertical layer
//! `k` is a contiguous `order x order` block with rows `i` and columns `j`.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Largest order for which determinants are defined.
pub const MAX_ORDER: usize = 3;

/// 1-based entry position `(i, j, k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Index3 {
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

impl Index3 {
    pub const fn new(i: usize, j: usize, k: usize) -> Self {
        Index3 { i, j, k }
    }

    pub fn coordinate(&self, axis: Axis) -> usize {
        match axis {
            Axis::HorizontalLayer => self.i,
            Axis::VerticalPage => self.j,
            Axis::VerticalLayer => self.k,
        }
    }

    fn with_coordinate(mut self, axis: Axis, value: usize) -> Self {
        match axis {
            Axis::HorizontalLayer => self.i = value,
            Axis::VerticalPage => self.j = value,
            Axis::VerticalLayer => self.k = value,
        }
        self
    }
}

impl fmt::Display for Index3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.i, self.j, self.k)
    }
}

impl From<(usize, usize, usize)> for Index3 {
    fn from((i, j, k): (usize, usize, usize)) -> Self {
        Index3 { i, j, k }
    }
}

/// The three slicing directions of a cubic matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axis {
    /// Fixed `i`; the analogue of a row.
    HorizontalLayer,
    /// Fixed `j`; the analogue of a column.
    VerticalPage,
    /// Fixed `k`; one displayed `i x j` block.
    VerticalLayer,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::HorizontalLayer, Axis::VerticalPage, Axis::VerticalLayer];

    /// One-letter code used on the command line and in report path names.
    pub fn code(&self) -> char {
        match self {
            Axis::HorizontalLayer => 'h',
            Axis::VerticalPage => 'p',
            Axis::VerticalLayer => 'l',
        }
    }

    pub fn from_code(code: &str) -> Option<Axis> {
        match code {
            "h" | "horizontal" | "horizontal-layer" => Some(Axis::HorizontalLayer),
            "p" | "page" | "vertical-page" => Some(Axis::VerticalPage),
            "l" | "layer" | "vertical-layer" => Some(Axis::VerticalLayer),
            _ => None,
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axis::HorizontalLayer => "horizontal layer",
            Axis::VerticalPage => "vertical page",
            Axis::VerticalLayer => "vertical layer",
        })
    }
}

/// Dimensions `m x n x p` of a (possibly non-cubic) three-index array, used
/// only to describe rejected input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Dim3 {
    pub m: usize,
    pub n: usize,
    pub p: usize,
}

impl Dim3 {
    pub fn is_cubic(&self) -> bool {
        self.m == self.n && self.n == self.p
    }
}

impl fmt::Display for Dim3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}x{}", self.m, self.n, self.p)
    }
}

/// Checks the size of a three-index array the way the recursive evaluator
/// does before expanding: cubic first, then order at most three.
pub fn check_shape(dim: Dim3) -> Result<usize> {
    if !dim.is_cubic() {
        return Err(Error::NotCubic { detail: format!("found {dim}") });
    }
    check_order(dim.m)
}

fn check_order(order: usize) -> Result<usize> {
    match order {
        0 => Err(Error::EmptyOrder),
        n if n > MAX_ORDER => Err(Error::OrderTooHigh { order: n }),
        n => Ok(n),
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CubicMatrix {
    order: usize,
    entries: Vec<Scalar>,
}

impl CubicMatrix {
    /// Builds a matrix from `order` vertical-layer blocks; block `k` row `i`
    /// column `j` becomes entry `(i, j, k)`.
    pub fn from_layers<T>(order: usize, layers: &[Vec<Vec<T>>]) -> Result<Self>
    where
        T: Clone + Into<Scalar>,
    {
        let order = check_order(order)?;
        if layers.len() != order {
            return Err(Error::NotCubic {
                detail: format!("expected {order} vertical layers, found {}", layers.len()),
            });
        }
        let mut entries = Vec::with_capacity(order.pow(3));
        for (k, block) in layers.iter().enumerate() {
            if block.len() != order {
                return Err(Error::NotCubic {
                    detail: format!("block {} has {} rows, expected {order}", k + 1, block.len()),
                });
            }
            for (i, row) in block.iter().enumerate() {
                if row.len() != order {
                    return Err(Error::NotCubic {
                        detail: format!(
                            "block {} row {} has {} entries, expected {order}",
                            k + 1,
                            i + 1,
                            row.len()
                        ),
                    });
                }
                entries.extend(row.iter().cloned().map(Into::into));
            }
        }
        Ok(CubicMatrix { order, entries })
    }

    /// Builds a matrix entry by entry.
    pub fn from_fn<F>(order: usize, mut f: F) -> Result<Self>
    where
        F: FnMut(Index3) -> Scalar,
    {
        let order = check_order(order)?;
        let entries = positions(order).map(&mut f).collect();
        Ok(CubicMatrix { order, entries })
    }

    /// Builds a matrix from entries already in canonical layout order.
    pub fn from_entries(order: usize, entries: Vec<Scalar>) -> Result<Self> {
        let order = check_order(order)?;
        if entries.len() != order.pow(3) {
            return Err(Error::NotCubic {
                detail: format!("expected {} entries, found {}", order.pow(3), entries.len()),
            });
        }
        Ok(CubicMatrix { order, entries })
    }

    pub fn zeros(order: usize) -> Result<Self> {
        Self::from_fn(order, |_| Scalar::ZERO)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Entries in canonical layout order (k, then i, then j).
    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    /// `(position, value)` pairs in canonical layout order.
    pub fn iter(&self) -> impl Iterator<Item = (Index3, Scalar)> + '_ {
        positions(self.order).zip(self.entries.iter().copied())
    }

    /// Vertical-layer blocks as nested vectors, `layers[k-1][i-1][j-1]`.
    pub fn layers(&self) -> Vec<Vec<Vec<Scalar>>> {
        let n = self.order;
        self.entries.chunks(n * n).map(|block| block.chunks(n).map(<[Scalar]>::to_vec).collect()).collect()
    }

    fn offset(&self, at: Index3) -> usize {
        let n = self.order;
        (at.k - 1) * n * n + (at.i - 1) * n + (at.j - 1)
    }

    fn check_index(&self, at: Index3) -> Result<()> {
        let n = self.order;
        let ok = |x: usize| (1..=n).contains(&x);
        if ok(at.i) && ok(at.j) && ok(at.k) {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { i: at.i, j: at.j, k: at.k, order: n })
        }
    }

    fn check_layer(&self, axis: Axis, index: usize) -> Result<()> {
        if (1..=self.order).contains(&index) {
            Ok(())
        } else {
            Err(Error::LayerOutOfRange { axis, index, order: self.order })
        }
    }

    pub fn get(&self, at: Index3) -> Result<Scalar> {
        self.check_index(at)?;
        Ok(self.entries[self.offset(at)])
    }

    /// Unchecked-by-contract access for positions produced internally.
    pub(crate) fn at(&self, at: Index3) -> Scalar {
        self.entries[self.offset(at)]
    }

    pub fn add(&self, other: &CubicMatrix) -> Result<CubicMatrix> {
        self.zip_with(other, Scalar::checked_add)
    }

    pub fn sub(&self, other: &CubicMatrix) -> Result<CubicMatrix> {
        self.zip_with(other, Scalar::checked_sub)
    }

    fn zip_with(
        &self,
        other: &CubicMatrix,
        op: impl Fn(Scalar, Scalar) -> Result<Scalar>,
    ) -> Result<CubicMatrix> {
        if self.order != other.order {
            return Err(Error::OrderMismatch { left: self.order, right: other.order });
        }
        let entries =
            self.entries.iter().zip(&other.entries).map(|(&a, &b)| op(a, b)).collect::<Result<_>>()?;
        Ok(CubicMatrix { order: self.order, entries })
    }

    pub fn neg(&self) -> Result<CubicMatrix> {
        self.map(Scalar::checked_neg)
    }

    /// Multiplies every entry by `c`.
    pub fn scale(&self, c: Scalar) -> Result<CubicMatrix> {
        self.map(|x| x.checked_mul(c))
    }

    fn map(&self, op: impl Fn(Scalar) -> Result<Scalar>) -> Result<CubicMatrix> {
        let entries = self.entries.iter().map(|&x| op(x)).collect::<Result<_>>()?;
        Ok(CubicMatrix { order: self.order, entries })
    }

    /// The order-(n-1) matrix left after deleting horizontal layer `i`,
    /// vertical page `j` and vertical layer `k`. Remaining layers keep their
    /// relative order.
    pub fn delete_sub(&self, at: Index3) -> Result<CubicMatrix> {
        if self.order == 1 {
            return Err(Error::OrderUnderflow);
        }
        self.check_index(at)?;
        let keep = |skip: usize| (1..=self.order).filter(move |&x| x != skip);
        let mut entries = Vec::with_capacity((self.order - 1).pow(3));
        for k in keep(at.k) {
            for i in keep(at.i) {
                for j in keep(at.j) {
                    entries.push(self.at(Index3::new(i, j, k)));
                }
            }
        }
        Ok(CubicMatrix { order: self.order - 1, entries })
    }

    /// Multiplies every entry whose `axis` coordinate equals `index` by `c`.
    pub fn scale_layer(&self, axis: Axis, index: usize, c: Scalar) -> Result<CubicMatrix> {
        self.check_layer(axis, index)?;
        let entries = self
            .iter()
            .map(|(at, x)| if at.coordinate(axis) == index { x.checked_mul(c) } else { Ok(x) })
            .collect::<Result<_>>()?;
        Ok(CubicMatrix { order: self.order, entries })
    }

    /// Exchanges layers `a` and `b` along `axis`.
    pub fn swap_layers(&self, axis: Axis, a: usize, b: usize) -> Result<CubicMatrix> {
        self.check_layer(axis, a)?;
        self.check_layer(axis, b)?;
        let swap = |x: usize| {
            if x == a {
                b
            } else if x == b {
                a
            } else {
                x
            }
        };
        let entries = positions(self.order)
            .map(|at| self.at(at.with_coordinate(axis, swap(at.coordinate(axis)))))
            .collect();
        Ok(CubicMatrix { order: self.order, entries })
    }
}

/// All positions of an order-`n` matrix in canonical layout order.
pub fn positions(order: usize) -> impl Iterator<Item = Index3> {
    (1..=order)
        .flat_map(move |k| (1..=order).flat_map(move |i| (1..=order).map(move |j| Index3::new(i, j, k))))
}

impl fmt::Debug for CubicMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CubicMatrix(order {}; ", self.order)?;
        for (k, block) in self.layers().iter().enumerate() {
            if k > 0 {
                f.write_str(" | ")?;
            }
            let rows: Vec<String> = block
                .iter()
                .map(|row| row.iter().map(Scalar::to_string).collect::<Vec<_>>().join(" "))
                .collect();
            f.write_str(&rows.join("; "))?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples::{example1, example2};

    fn ix(i: usize, j: usize, k: usize) -> Index3 {
        Index3::new(i, j, k)
    }

    fn int(v: i64) -> Scalar {
        Scalar::from_int(v)
    }

    #[test]
    fn example_entries() {
        let a = example2();
        assert_eq!(a.get(ix(1, 3, 1)).unwrap(), int(-4));
        assert_eq!(a.get(ix(3, 2, 2)).unwrap(), int(2));
        assert_eq!(a.get(ix(2, 1, 3)).unwrap(), int(3));
        assert_eq!(a.get(ix(1, 1, 1)).unwrap(), int(3));
        assert_eq!(a.get(ix(1, 2, 3)).unwrap(), int(1));
        assert_eq!(example1().get(ix(2, 1, 2)).unwrap(), int(-7));
    }

    #[test]
    fn order_one_is_its_element() {
        let a = CubicMatrix::from_layers(1, &[vec![vec![7]]]).unwrap();
        assert_eq!(a.entries(), &[int(7)]);
    }

    #[test]
    fn get_out_of_range_reports_triple() {
        let err = example1().get(ix(3, 1, 2)).unwrap_err();
        assert_eq!(err, Error::IndexOutOfRange { i: 3, j: 1, k: 2, order: 2 });
        assert!(err.to_string().contains("(3, 1, 2)"));
        assert!(example1().get(ix(0, 1, 1)).is_err());
    }

    #[test]
    fn construction_errors() {
        let two_blocks = [vec![vec![1, 2], vec![3, 4]], vec![vec![5, 6], vec![7, 8]]];
        let err = CubicMatrix::from_layers(3, &two_blocks).unwrap_err();
        assert!(matches!(err, Error::NotCubic { .. }));

        let ragged = [vec![vec![1, 2], vec![3, 4]], vec![vec![5, 6], vec![7]]];
        let err = CubicMatrix::from_layers(2, &ragged).unwrap_err();
        assert!(err.to_string().contains("block 2 row 2"), "{err}");
        assert!(err.to_string().contains("not square"));

        let empty: [Vec<Vec<i64>>; 0] = [];
        assert_eq!(CubicMatrix::from_layers(0, &empty), Err(Error::EmptyOrder));
        assert_eq!(CubicMatrix::zeros(4), Err(Error::OrderTooHigh { order: 4 }));
    }

    #[test]
    fn shape_check_mirrors_evaluator_guards() {
        assert!(matches!(check_shape(Dim3 { m: 2, n: 2, p: 3 }), Err(Error::NotCubic { .. })));
        assert_eq!(check_shape(Dim3 { m: 4, n: 4, p: 4 }), Err(Error::OrderTooHigh { order: 4 }));
        assert_eq!(check_shape(Dim3 { m: 3, n: 3, p: 3 }), Ok(3));
    }

    #[test]
    fn addition() {
        let a = example1();
        let zero = CubicMatrix::zeros(2).unwrap();
        assert_eq!(a.add(&zero).unwrap(), a);
        assert_eq!(a.add(&a.scale(int(-1)).unwrap()).unwrap(), zero);
        let doubled = a.add(&a).unwrap();
        assert_eq!(doubled.get(ix(1, 1, 1)).unwrap(), int(8));
        for (at, x) in a.iter() {
            assert_eq!(doubled.get(at).unwrap(), x.checked_add(x).unwrap());
        }
        assert_eq!(a.add(&example2()), Err(Error::OrderMismatch { left: 2, right: 3 }));
    }

    #[test]
    fn delete_sub_matches_displayed_minors() {
        let a = example2();
        let expected =
            CubicMatrix::from_layers(2, &[vec![vec![0, 3], vec![2, 5]], vec![vec![1, 2], vec![4, 3]]])
                .unwrap();
        assert_eq!(a.delete_sub(ix(1, 1, 1)).unwrap(), expected);

        let expected =
            CubicMatrix::from_layers(2, &[vec![vec![2, -1], vec![0, -2]], vec![vec![-3, 3], vec![-3, 5]]])
                .unwrap();
        assert_eq!(a.delete_sub(ix(1, 2, 3)).unwrap(), expected);

        let b = example1().delete_sub(ix(1, 1, 1)).unwrap();
        assert_eq!(b.order(), 1);
        assert_eq!(b.entries(), &[int(3)]);

        let one = CubicMatrix::from_layers(1, &[vec![vec![5]]]).unwrap();
        assert_eq!(one.delete_sub(ix(1, 1, 1)), Err(Error::OrderUnderflow));
        assert!(a.delete_sub(ix(1, 4, 1)).is_err());
    }

    #[test]
    fn layer_transforms() {
        let a = example1();
        assert_eq!(a.scale_layer(Axis::VerticalPage, 1, Scalar::ONE).unwrap(), a);

        let z = a.scale_layer(Axis::HorizontalLayer, 1, Scalar::ZERO).unwrap();
        for (at, x) in z.iter() {
            if at.i == 1 {
                assert!(x.is_zero());
            } else {
                assert_eq!(x, a.get(at).unwrap());
            }
        }

        let p = a.scale_layer(Axis::VerticalPage, 2, int(2)).unwrap();
        assert_eq!(p.get(ix(1, 2, 1)).unwrap(), int(-6));
        assert_eq!(p.get(ix(1, 1, 1)).unwrap(), int(4));

        assert_eq!(a.swap_layers(Axis::VerticalLayer, 2, 2).unwrap(), a);
        let s = a.swap_layers(Axis::HorizontalLayer, 1, 2).unwrap();
        assert_eq!(s.get(ix(1, 1, 1)).unwrap(), int(-1));
        assert_eq!(s.swap_layers(Axis::HorizontalLayer, 2, 1).unwrap(), a);

        let s = example2().swap_layers(Axis::VerticalLayer, 1, 3).unwrap();
        assert_eq!(s.get(ix(1, 2, 1)).unwrap(), int(1));
        assert_eq!(s.get(ix(1, 2, 2)).unwrap(), int(4));

        assert_eq!(
            a.swap_layers(Axis::VerticalPage, 1, 3),
            Err(Error::LayerOutOfRange { axis: Axis::VerticalPage, index: 3, order: 2 })
        );
        assert!(a.scale_layer(Axis::VerticalLayer, 0, Scalar::ONE).is_err());
    }

    #[test]
    fn layers_round_trip() {
        let a = example2();
        let rebuilt = CubicMatrix::from_layers(3, &a.layers()).unwrap();
        assert_eq!(rebuilt, a);
        assert_eq!(a.layers()[0][0], vec![int(3), int(0), int(-4)]);
    }
}
