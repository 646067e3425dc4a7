//! Catalog of named finite monoids and the direct product construction.

use std::fmt;
use std::str::FromStr;

use super::{FiniteMonoid, MonoidError};

/// Upper bound on raw candidates enumerated by an instance builder.
pub const INSTANCE_CAP: u128 = 1_000_000;

/// Upper bound on the number of elements of a built table.
pub const TABLE_CAP: usize = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InstanceKind {
    Trivial,
    Cyclic(usize),
    /// Identity plus `k` generators; every product of non-identity elements is 0.
    NullMonoid(usize),
    TwoElementWithZero,
    FullTransformation(usize),
    /// `n x n` matrices over `Z/m` with determinant coprime to `m`.
    Gl {
        n: usize,
        m: usize,
    },
}

impl fmt::Display for InstanceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InstanceKind::Trivial => write!(f, "trivial"),
            InstanceKind::Cyclic(m) => write!(f, "cyclic({m})"),
            InstanceKind::NullMonoid(k) => write!(f, "null_monoid({k})"),
            InstanceKind::TwoElementWithZero => write!(f, "two_element_with_zero"),
            InstanceKind::FullTransformation(m) => write!(f, "full_transformation({m})"),
            InstanceKind::Gl { n, m } => write!(f, "gl({n},{m})"),
        }
    }
}

impl FromStr for InstanceKind {
    type Err = MonoidError;

    /// Parses `name` or `name(p1,p2,...)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (name, args) = match s.find('(') {
            Some(open) => {
                let close = s
                    .strip_suffix(')')
                    .ok_or_else(|| MonoidError::BadParameters(s.to_string()))?;
                let args: Result<Vec<usize>, _> = close[open + 1..]
                    .split(',')
                    .map(|a| a.trim().parse::<usize>())
                    .collect();
                let args = args.map_err(|e| MonoidError::BadParameters(format!("{s}: {e}")))?;
                (&s[..open], args)
            }
            None => (s, Vec::new()),
        };
        let arity = |k: usize| -> Result<(), MonoidError> {
            if args.len() == k {
                Ok(())
            } else {
                Err(MonoidError::BadParameters(format!(
                    "{name} takes {k} parameter(s)"
                )))
            }
        };
        match name.trim() {
            "trivial" => arity(0).map(|_| InstanceKind::Trivial),
            "cyclic" => arity(1).map(|_| InstanceKind::Cyclic(args[0])),
            "null_monoid" => arity(1).map(|_| InstanceKind::NullMonoid(args[0])),
            "two_element_with_zero" => arity(0).map(|_| InstanceKind::TwoElementWithZero),
            "full_transformation" => arity(1).map(|_| InstanceKind::FullTransformation(args[0])),
            "gl" => arity(2).map(|_| InstanceKind::Gl {
                n: args[0],
                m: args[1],
            }),
            other => Err(MonoidError::UnknownKind(other.to_string())),
        }
    }
}

fn check_table_size(n: usize) -> Result<(), MonoidError> {
    if n > TABLE_CAP {
        Err(MonoidError::SizeLimit {
            requested: n as u128,
            cap: TABLE_CAP as u128,
        })
    } else {
        Ok(())
    }
}

fn check_candidates(count: u128) -> Result<(), MonoidError> {
    if count > INSTANCE_CAP {
        Err(MonoidError::SizeLimit {
            requested: count,
            cap: INSTANCE_CAP,
        })
    } else {
        Ok(())
    }
}

/// Builds a catalog monoid.
pub fn instance(kind: &InstanceKind) -> Result<FiniteMonoid, MonoidError> {
    match *kind {
        InstanceKind::Trivial => Ok(FiniteMonoid::from_flat_unchecked(vec![0], vec!["1".into()])),
        InstanceKind::Cyclic(m) => cyclic(m),
        InstanceKind::NullMonoid(k) => null_monoid(k),
        InstanceKind::TwoElementWithZero => Ok(FiniteMonoid::from_flat_unchecked(
            vec![0, 1, 1, 1],
            vec!["1".into(), "0".into()],
        )),
        InstanceKind::FullTransformation(m) => full_transformation(m),
        InstanceKind::Gl { n, m } => general_linear(n, m),
    }
}

fn cyclic(m: usize) -> Result<FiniteMonoid, MonoidError> {
    if m == 0 {
        return Err(MonoidError::BadParameters(
            "cyclic order must be positive".into(),
        ));
    }
    check_table_size(m)?;
    let table = (0..m)
        .flat_map(|i| (0..m).map(move |j| (i + j) % m))
        .collect();
    let names = (0..m)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{i}"),
        })
        .collect();
    Ok(FiniteMonoid::from_flat_unchecked(table, names))
}

fn letter_name(i: usize) -> String {
    let letters = b"abcdefghijklmnopqrstuvwxyz";
    if i < letters.len() {
        (letters[i] as char).to_string()
    } else {
        format!("a{i}")
    }
}

fn null_monoid(k: usize) -> Result<FiniteMonoid, MonoidError> {
    let n = k + 2;
    check_table_size(n)?;
    let zero = k + 1;
    let mut table = vec![zero; n * n];
    for x in 0..n {
        table[x] = x;
        table[x * n] = x;
    }
    let mut names = vec!["1".to_string()];
    names.extend((0..k).map(letter_name));
    names.push("0".into());
    Ok(FiniteMonoid::from_flat_unchecked(table, names))
}

fn full_transformation(m: usize) -> Result<FiniteMonoid, MonoidError> {
    if m == 0 {
        return Err(MonoidError::BadParameters("degree must be positive".into()));
    }
    check_candidates((m as u128).checked_pow(m as u32).unwrap_or(u128::MAX))?;
    let count = m.pow(m as u32);
    check_table_size(count)?;
    // maps as image vectors; identity first, the rest in lexicographic order
    let identity: Vec<usize> = (0..m).collect();
    let mut maps = vec![identity.clone()];
    for code in 0..count {
        let mut img = vec![0; m];
        let mut c = code;
        for slot in img.iter_mut().rev() {
            *slot = c % m;
            c /= m;
        }
        if img != identity {
            maps.push(img);
        }
    }
    let index_of = |img: &[usize]| maps.iter().position(|f| f == img).expect("closed");
    let mut table = Vec::with_capacity(count * count);
    for f in &maps {
        for g in &maps {
            // apply f first, then g
            let h: Vec<usize> = f.iter().map(|&i| g[i]).collect();
            table.push(index_of(&h));
        }
    }
    let names = maps
        .iter()
        .map(|f| {
            format!(
                "[{}]",
                f.iter()
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            )
        })
        .collect();
    Ok(FiniteMonoid::from_flat_unchecked(table, names))
}

fn det_mod(a: &[i64], n: usize, m: i64) -> i64 {
    if n == 1 {
        return a[0].rem_euclid(m);
    }
    let mut total = 0i64;
    for col in 0..n {
        let minor: Vec<i64> = (1..n)
            .flat_map(|r| (0..n).filter(move |&c| c != col).map(move |c| (r, c)))
            .map(|(r, c)| a[r * n + c])
            .collect();
        let sign = if col % 2 == 0 { 1 } else { -1 };
        total = (total + sign * a[col] * det_mod(&minor, n - 1, m)).rem_euclid(m);
    }
    total
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn general_linear(n: usize, m: usize) -> Result<FiniteMonoid, MonoidError> {
    if n == 0 || m < 2 {
        return Err(MonoidError::BadParameters(
            "gl requires n >= 1 and m >= 2".into(),
        ));
    }
    let candidates = (m as u128).checked_pow((n * n) as u32).unwrap_or(u128::MAX);
    check_candidates(candidates)?;
    let cells = n * n;
    let modulus = m as i64;
    let identity: Vec<i64> = (0..cells).map(|i| i64::from(i % (n + 1) == 0)).collect();
    let mut mats = vec![identity.clone()];
    for code in 0..candidates as usize {
        let mut a = vec![0i64; cells];
        let mut c = code;
        for slot in a.iter_mut().rev() {
            *slot = (c % m) as i64;
            c /= m;
        }
        if a != identity && gcd(det_mod(&a, n, modulus), modulus) == 1 {
            mats.push(a);
        }
    }
    check_table_size(mats.len())?;
    let encode = |a: &[i64]| a.iter().fold(0usize, |acc, &v| acc * m + v as usize);
    let mut index = vec![usize::MAX; candidates as usize];
    for (i, a) in mats.iter().enumerate() {
        index[encode(a)] = i;
    }
    let mut table = Vec::with_capacity(mats.len() * mats.len());
    let mut prod = vec![0i64; cells];
    for a in &mats {
        for b in &mats {
            for r in 0..n {
                for c in 0..n {
                    prod[r * n + c] =
                        (0..n).map(|k| a[r * n + k] * b[k * n + c]).sum::<i64>() % modulus;
                }
            }
            table.push(index[encode(&prod)]);
        }
    }
    let names = mats
        .iter()
        .map(|a| {
            let rows: Vec<String> = a
                .chunks(n)
                .map(|r| {
                    format!(
                        "[{}]",
                        r.iter()
                            .map(|v| v.to_string())
                            .collect::<Vec<_>>()
                            .join(",")
                    )
                })
                .collect();
            format!("[{}]", rows.join(","))
        })
        .collect();
    Ok(FiniteMonoid::from_flat_unchecked(table, names))
}

/// Componentwise product `H x K`; element `(h, k)` has index `h * |K| + k`.
pub fn direct_product(h: &FiniteMonoid, k: &FiniteMonoid) -> Result<FiniteMonoid, MonoidError> {
    let (p, q) = (h.size(), k.size());
    let n = p.checked_mul(q).ok_or(MonoidError::SizeLimit {
        requested: u128::MAX,
        cap: TABLE_CAP as u128,
    })?;
    check_table_size(n)?;
    let mut table = Vec::with_capacity(n * n);
    for x in 0..n {
        let (x1, x2) = (x / q, x % q);
        for y in 0..n {
            let (y1, y2) = (y / q, y % q);
            table.push(h.table[x1 * p + y1] * q + k.table[x2 * q + y2]);
        }
    }
    let names = (0..n)
        .map(|x| format!("({},{})", h.names[x / q], k.names[x % q]))
        .collect();
    Ok(FiniteMonoid::from_flat_unchecked(table, names))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_group(m: &FiniteMonoid) -> bool {
        m.validate().is_ok()
            && m.elements().all(|x| {
                m.elements()
                    .any(|y| m.mul(x, y).0 == 0 && m.mul(y, x).0 == 0)
            })
    }

    #[test]
    fn catalog_parses_and_validates() {
        for spec in [
            "trivial",
            "cyclic(3)",
            "null_monoid(2)",
            "two_element_with_zero",
            "full_transformation(3)",
            "gl(2,2)",
            "gl(2,3)",
        ] {
            let kind: InstanceKind = spec.parse().unwrap();
            assert_eq!(kind.to_string(), spec);
            instance(&kind).unwrap().validate().unwrap();
        }
        assert!(matches!(
            "free(2)".parse::<InstanceKind>(),
            Err(MonoidError::UnknownKind(_))
        ));
        assert!("cyclic(1,2)".parse::<InstanceKind>().is_err());
    }

    #[test]
    fn sizes() {
        assert_eq!(instance(&InstanceKind::Cyclic(3)).unwrap().size(), 3);
        assert_eq!(
            instance(&InstanceKind::NullMonoid(2)).unwrap().names(),
            &["1", "a", "b", "0"]
        );
        assert_eq!(
            instance(&InstanceKind::FullTransformation(3))
                .unwrap()
                .size(),
            27
        );
        // 6 of the 16 matrices over Z/2 are invertible
        let gl22 = instance(&InstanceKind::Gl { n: 2, m: 2 }).unwrap();
        assert_eq!(gl22.size(), 6);
        assert!(brute_force_group(&gl22));
        assert!(!gl22.is_commutative());
        assert_eq!(
            instance(&InstanceKind::Gl { n: 2, m: 3 }).unwrap().size(),
            48
        );
        // Z/4: determinant must be odd
        assert_eq!(
            instance(&InstanceKind::Gl { n: 1, m: 4 }).unwrap().size(),
            2
        );
    }

    #[test]
    fn size_caps() {
        let err = instance(&InstanceKind::Gl { n: 4, m: 4 }).unwrap_err();
        assert!(matches!(err, MonoidError::SizeLimit { .. }));
        let c = instance(&InstanceKind::Cyclic(100)).unwrap();
        assert!(matches!(
            direct_product(&c, &c),
            Err(MonoidError::SizeLimit { .. })
        ));
    }

    #[test]
    fn products() {
        let c2 = instance(&InstanceKind::Cyclic(2)).unwrap();
        let c3 = instance(&InstanceKind::Cyclic(3)).unwrap();
        let c6 = direct_product(&c2, &c3).unwrap();
        c6.validate().unwrap();
        assert_eq!(c6.size(), 6);
        assert!(brute_force_group(&c6));
        assert!(c6.is_commutative());

        let n3 = instance(&InstanceKind::NullMonoid(1)).unwrap();
        let t = instance(&InstanceKind::Trivial).unwrap();
        let copy = direct_product(&t, &n3).unwrap();
        assert_eq!(copy.table_rows(), n3.table_rows());
        assert_eq!(copy.names()[1], "(1,a)");
    }
}
