//! Letter weightings conserved by every defining relation.

use num_rational::Rational64;

use super::Presentation;

/// A basis of the integer weightings `f` of the generators with
/// `f(lhs) = f(rhs)` for every relation, i.e. the rational null space of the
/// matrix of letter-count differences, scaled to primitive integer vectors.
pub fn conserved_functionals(p: &Presentation) -> Vec<Vec<i64>> {
    let n = p.generators.len();
    let mut rows: Vec<Vec<Rational64>> = p
        .relations
        .iter()
        .map(|(l, r)| {
            let mut row = vec![Rational64::from_integer(0); n];
            for &g in &l.0 {
                row[g as usize] += 1;
            }
            for &g in &r.0 {
                row[g as usize] -= 1;
            }
            row
        })
        .collect();

    // reduced row echelon form
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..n {
        let Some(pivot) = (rank..rows.len()).find(|&i| rows[i][col] != 0.into()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let lead = rows[rank][col];
        for v in &mut rows[rank] {
            *v /= lead;
        }
        for i in 0..rows.len() {
            if i != rank && rows[i][col] != 0.into() {
                let factor = rows[i][col];
                let pivot_row = rows[rank].clone();
                for (v, pv) in rows[i].iter_mut().zip(pivot_row) {
                    *v -= factor * pv;
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }

    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rational64::from_integer(0); n];
        v[free] = 1.into();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -rows[r][free];
        }
        let lcm = v.iter().fold(1i64, |acc, q| lcm(acc, *q.denom()));
        let ints: Vec<i64> = v.iter().map(|q| (q * lcm).to_integer()).collect();
        let g = ints.iter().fold(0i64, |acc, &x| gcd(acc, x.abs()));
        basis.push(ints.into_iter().map(|x| x / g.max(1)).collect());
    }
    basis
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: i64, b: i64) -> i64 {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{example_4_10, example_4_8, example_5_4, parse_presentation};

    #[test]
    fn bases() {
        // x^n = y x^n y only conserves the number of x
        assert_eq!(conserved_functionals(&example_4_8(3)), vec![vec![1, 0]]);
        assert_eq!(conserved_functionals(&example_5_4()), vec![vec![1, 0]]);
        // w x y z: relation differences are (-1, 0, -2, 0)
        assert_eq!(
            conserved_functionals(&example_4_10(4)),
            vec![vec![0, 1, 0, 0], vec![-2, 0, 1, 0], vec![0, 0, 0, 1]]
        );
        let free = parse_presentation("gens: a b").unwrap();
        assert_eq!(conserved_functionals(&free), vec![vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn functionals_are_conserved_and_complete() {
        let p = parse_presentation("gens: a b c d; rel: a*b = c*c; rel: d = a*a*a").unwrap();
        let basis = conserved_functionals(&p);
        assert_eq!(basis.len(), 2);
        for f in &basis {
            for (l, r) in &p.relations {
                let w = |g: &crate::presentation::GenWord| {
                    g.0.iter().map(|&i| f[i as usize]).sum::<i64>()
                };
                assert_eq!(w(l), w(r));
            }
        }
    }
}
