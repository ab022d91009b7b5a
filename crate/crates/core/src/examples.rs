//! The two worked matrices used throughout the tests, CLI fixtures and demo.

use crate::core3d::CubicMatrix;

/// Order-2 worked example, determinant `-3`.
pub fn example1() -> CubicMatrix {
    CubicMatrix::from_layers(2, &[vec![vec![4, -3], vec![-1, 5]], vec![vec![-2, 4], vec![-7, 3]]])
        .expect("static order-2 example")
}

/// Order-3 worked example, determinant `326`.
pub fn example2() -> CubicMatrix {
    CubicMatrix::from_layers(
        3,
        &[
            vec![vec![3, 0, -4], vec![2, 5, -1], vec![0, 3, -2]],
            vec![vec![-2, 4, 0], vec![-3, 0, 3], vec![-3, 2, 5]],
            vec![vec![5, 1, 0], vec![3, 1, 2], vec![0, 4, 3]],
        ],
    )
    .expect("static order-3 example")
}
