use num_bigint::BigInt;
use proptest::prelude::*;
use sdualkit_core::exactalg::{eval_product, integer_kernel, IntegerMatrix, LinearForm, Polynomial};

fn poly(nvars: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0u32..3, nvars), -5i64..=5), 0..5).prop_map(move |terms| {
        Polynomial::from_terms(nvars, terms.into_iter().map(|(e, c)| (e, BigInt::from(c)))).unwrap()
    })
}

fn matrix() -> impl Strategy<Value = IntegerMatrix> {
    (0usize..4, 1usize..5).prop_flat_map(|(r, c)| {
        prop::collection::vec(-3i64..=3, r * c).prop_map(move |data| IntegerMatrix::new(r, c, data).unwrap())
    })
}

// determinant by cofactor expansion, small sizes only
fn det(m: &[Vec<i64>]) -> i64 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect())
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * det(&minor)
            })
            .sum(),
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn ring_axioms(a in poly(2), b in poly(2), c in poly(2)) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn kernel_is_saturated_basis(m in matrix()) {
        let basis = integer_kernel(&m);
        for v in &basis {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(|&x| x == 0));
        }
        prop_assert_eq!(basis.len() + m.rank(), m.cols());
        // a full-rank sublattice of the kernel is the whole kernel lattice
        // exactly when the gcd of its maximal minors is 1
        let k = basis.len();
        if k > 0 {
            let g = subsets(m.cols(), k).iter().fold(0, |g, cols| {
                let sq: Vec<Vec<i64>> = basis.iter().map(|v| cols.iter().map(|&j| v[j]).collect()).collect();
                gcd(g, det(&sq))
            });
            prop_assert_eq!(g, 1);
        }
    }

    #[test]
    fn eval_product_is_multiplicative(
        a in prop::collection::vec((prop::collection::vec(-3i64..=3, 2), 0u32..3), 0..3),
        b in prop::collection::vec((prop::collection::vec(-3i64..=3, 2), 0u32..3), 0..3),
    ) {
        let to_forms = |v: &[(Vec<i64>, u32)]| -> Vec<(LinearForm, u32)> {
            v.iter().map(|(c, e)| (LinearForm::new(c.clone()), *e)).collect()
        };
        let (fa, fb) = (to_forms(&a), to_forms(&b));
        let mut both = fa.clone();
        both.extend(fb.iter().cloned());
        let lhs = eval_product(2, &both).unwrap();
        let rhs = &eval_product(2, &fa).unwrap() * &eval_product(2, &fb).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn kernel_examples() {
    let m = IntegerMatrix::from_rows(3, &[vec![1, 0, -1], vec![0, 1, -1]]).unwrap();
    assert_eq!(integer_kernel(&m), vec![vec![1, 1, 1]]);
    assert_eq!(integer_kernel(&IntegerMatrix::from_rows(1, &[vec![1]]).unwrap()), Vec::<Vec<i64>>::new());
    assert_eq!(integer_kernel(&IntegerMatrix::from_rows(2, &[vec![1, -1]]).unwrap()), vec![vec![1, 1]]);
}
