use std::cmp::Ordering;
use std::fmt;

/// A variable of the shared registry: `q`, `x1..xn` and `t1..tn`.
///
/// The derived order (`q` before every `x_i`, every `x_i` before every `t_i`)
/// fixes the variable order used for printing and for monomial comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Q,
    /// `x_i`, 1-based.
    X(u16),
    /// `t_i`, 1-based.
    T(u16),
}

impl Var {
    pub fn x(i: usize) -> Var {
        assert!(i >= 1, "variables are 1-based");
        Var::X(i as u16)
    }

    pub fn t(i: usize) -> Var {
        assert!(i >= 1, "variables are 1-based");
        Var::T(i as u16)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::Q => f.write_str("q"),
            Var::X(i) => write!(f, "x{i}"),
            Var::T(i) => write!(f, "t{i}"),
        }
    }
}

/// A Laurent monomial: a product of variables raised to nonzero integer powers.
///
/// Stored sparsely as `(var, exponent)` pairs sorted by variable with no zero
/// exponents, so structural equality is mathematical equality.
///
/// Monomials are totally ordered by total degree first; ties are broken by the
/// reverse of the lexicographic order on exponent vectors. This is a graded
/// order compatible with multiplication, and it is the order used both for
/// printing (ascending) and for choosing leading terms in long division.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: Vec<(Var, i32)>,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial { exps: Vec::new() }
    }

    pub fn var(v: Var) -> Monomial {
        Monomial::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: i32) -> Monomial {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial { exps: vec![(v, e)] }
        }
    }

    /// Builds a monomial from arbitrary pairs; repeated variables are merged.
    pub fn from_pairs<I: IntoIterator<Item = (Var, i32)>>(pairs: I) -> Monomial {
        let mut exps: Vec<(Var, i32)> = pairs.into_iter().collect();
        exps.sort_by_key(|&(v, _)| v);
        let mut merged: Vec<(Var, i32)> = Vec::with_capacity(exps.len());
        for (v, e) in exps {
            match merged.last_mut() {
                Some((lv, le)) if *lv == v => *le += e,
                _ => merged.push((v, e)),
            }
        }
        merged.retain(|&(_, e)| e != 0);
        Monomial { exps: merged }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, v: Var) -> i32 {
        match self.exps.binary_search_by_key(&v, |&(w, _)| w) {
            Ok(idx) => self.exps[idx].1,
            Err(_) => 0,
        }
    }

    pub fn degree(&self) -> i64 {
        self.exps.iter().map(|&(_, e)| e as i64).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Var, i32)> + '_ {
        self.exps.iter().copied()
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.exps.iter().map(|&(v, _)| v)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.combine(other, 1)
    }

    /// `self / other`; always defined in the Laurent ring.
    pub fn div(&self, other: &Monomial) -> Monomial {
        self.combine(other, -1)
    }

    pub fn pow(&self, k: i32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial {
            exps: self.exps.iter().map(|&(v, e)| (v, e * k)).collect(),
        }
    }

    pub fn inverse(&self) -> Monomial {
        self.pow(-1)
    }

    /// True when every exponent of `self` is at most the matching exponent of
    /// `other`, i.e. `other / self` has no negative exponents.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.div(other).exps.iter().all(|&(_, e)| e <= 0)
    }

    pub fn has_negative_exponent(&self) -> bool {
        self.exps.iter().any(|&(_, e)| e < 0)
    }

    /// Componentwise minimum of exponents (absent variables count as 0).
    pub fn min_with(&self, other: &Monomial) -> Monomial {
        self.merge_with(other, i32::min)
    }

    fn combine(&self, other: &Monomial, sign: i32) -> Monomial {
        self.merge_with(other, |a, b| a + sign * b)
    }

    fn merge_with(&self, other: &Monomial, f: impl Fn(i32, i32) -> i32) -> Monomial {
        let (a, b) = (&self.exps, &other.exps);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let (v, e) = match (a.get(i), b.get(j)) {
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => {
                        i += 1;
                        (va, f(ea, 0))
                    }
                    Ordering::Greater => {
                        j += 1;
                        (vb, f(0, eb))
                    }
                    Ordering::Equal => {
                        i += 1;
                        j += 1;
                        (va, f(ea, eb))
                    }
                },
                (Some(&(va, ea)), None) => {
                    i += 1;
                    (va, f(ea, 0))
                }
                (None, Some(&(vb, eb))) => {
                    j += 1;
                    (vb, f(0, eb))
                }
                (None, None) => unreachable!(),
            };
            if e != 0 {
                out.push((v, e));
            }
        }
        Monomial { exps: out }
    }

    /// Lexicographic comparison of dense exponent vectors in variable order.
    fn lex_cmp(&self, other: &Monomial) -> Ordering {
        let (a, b) = (&self.exps, &other.exps);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(&(_, ea)), None) => return ea.cmp(&0),
                (None, Some(&(_, eb))) => return 0.cmp(&eb),
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => return ea.cmp(&0),
                    Ordering::Greater => return 0.cmp(&eb),
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.lex_cmp(self))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return f.write_str("1");
        }
        for (k, &(v, e)) in self.exps.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}
