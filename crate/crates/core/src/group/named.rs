//! Constructors for the named groups used throughout the crate.
//!
//! Recipe grammar:
//!
//! ```text
//! recipe := cyclic(n) | dihedral(n) | quaternion8 | symmetric(k) | alternating(k)
//!         | elementary_abelian(p,k) | direct(recipe, recipe)
//!         | semidirect_c3_c4 | semidirect_c5_c4
//! ```
//!
//! `dihedral(n)` has order `2n`. Short aliases such as `sym4`, `alt5`,
//! `cyclic15`, `c15`, `dihedral6` and `q8` are accepted as well.
//! Presented groups are realized directly as words `a^i b^j` with an explicit
//! normal form, not through coset enumeration.

use std::fmt;

use super::FiniteGroup;
use crate::error::{Error, Result};

pub const DEFAULT_ORDER_CAP: usize = 1024;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Recipe {
    Cyclic(usize),
    Dihedral(usize),
    Quaternion8,
    Symmetric(usize),
    Alternating(usize),
    ElementaryAbelian { p: usize, k: usize },
    Direct(Box<Recipe>, Box<Recipe>),
    SemidirectC3C4,
    SemidirectC5C4,
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Recipe::Cyclic(n) => write!(f, "cyclic({n})"),
            Recipe::Dihedral(n) => write!(f, "dihedral({n})"),
            Recipe::Quaternion8 => write!(f, "quaternion8"),
            Recipe::Symmetric(k) => write!(f, "symmetric({k})"),
            Recipe::Alternating(k) => write!(f, "alternating({k})"),
            Recipe::ElementaryAbelian { p, k } => write!(f, "elementary_abelian({p},{k})"),
            Recipe::Direct(a, b) => write!(f, "direct({a}, {b})"),
            Recipe::SemidirectC3C4 => write!(f, "semidirect_c3_c4"),
            Recipe::SemidirectC5C4 => write!(f, "semidirect_c5_c4"),
        }
    }
}

impl Recipe {
    pub fn parse(text: &str) -> Result<Recipe> {
        let mut p = Parser {
            src: text,
            pos: 0,
        };
        let r = p.recipe()?;
        p.skip_ws();
        if p.pos != text.len() {
            return Err(Error::UnknownRecipe(text.to_string()));
        }
        Ok(r)
    }

    /// Order of the group the recipe builds, or `None` on overflow.
    pub fn order(&self) -> Option<usize> {
        match self {
            Recipe::Cyclic(n) => Some(*n),
            Recipe::Dihedral(n) => n.checked_mul(2),
            Recipe::Quaternion8 => Some(8),
            Recipe::Symmetric(k) => (1..=*k).try_fold(1usize, |a, b| a.checked_mul(b)),
            Recipe::Alternating(k) => {
                let f = (1..=*k).try_fold(1usize, |a, b| a.checked_mul(b))?;
                Some(if *k >= 2 { f / 2 } else { f })
            }
            Recipe::ElementaryAbelian { p, k } => p.checked_pow(*k as u32),
            Recipe::Direct(a, b) => a.order()?.checked_mul(b.order()?),
            Recipe::SemidirectC3C4 => Some(12),
            Recipe::SemidirectC5C4 => Some(20),
        }
    }

    fn validate(&self) -> Result<()> {
        let bad = |why: String| Err(Error::UnknownRecipe(format!("{self}: {why}")));
        match self {
            Recipe::Cyclic(0) => bad("order must be positive".into()),
            Recipe::Dihedral(n) if *n < 1 => bad("n must be positive".into()),
            Recipe::Symmetric(k) | Recipe::Alternating(k) if *k == 0 || *k > 6 => {
                bad("degree must be in 1..=6".into())
            }
            Recipe::ElementaryAbelian { p, k } if !is_prime(*p) || *k == 0 => {
                bad("needs a prime p and k >= 1".into())
            }
            Recipe::Direct(a, b) => {
                a.validate()?;
                b.validate()
            }
            _ => Ok(()),
        }
    }

    pub fn build(&self, order_cap: usize) -> Result<FiniteGroup> {
        self.validate()?;
        let order = self.order().unwrap_or(usize::MAX);
        if order > order_cap {
            return Err(Error::OrderTooLarge { order, cap: order_cap });
        }
        let (table, labels) = self.raw();
        FiniteGroup::from_cayley_table(&table, Some(labels), self.to_string())
    }

    /// Table and labels with the identity at index 0.
    fn raw(&self) -> (Vec<Vec<usize>>, Vec<String>) {
        match self {
            Recipe::Cyclic(n) => {
                let n = *n;
                let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
                (table, (0..n).map(|i| word(i, 0, "")).collect())
            }
            Recipe::Dihedral(n) => {
                // a^i b^j, b a b^-1 = a^-1
                metacyclic(*n, 2, |j, k| if j % 2 == 0 { k } else { (*n - k) % *n }, |_, _| 0, "b")
            }
            Recipe::SemidirectC3C4 => {
                // b^-1 a b = a^-1
                metacyclic(3, 4, |j, k| if j % 2 == 0 { k } else { (3 - k) % 3 }, |_, _| 0, "b")
            }
            Recipe::SemidirectC5C4 => {
                // b^-1 a b a^3 = 1, so b^-1 a b = a^2 and b a b^-1 = a^3:
                // b^j a^k = a^(k 3^j) b^j
                metacyclic(5, 4, |j, k| (k * 3usize.pow(j as u32)) % 5, |_, _| 0, "b")
            }
            Recipe::Quaternion8 => {
                // a^4 = 1, b^2 = a^2, b a b^-1 = a^-1
                metacyclic(4, 2, |j, k| if j == 0 { k } else { (4 - k) % 4 }, |j, l| if j + l >= 2 { 2 } else { 0 }, "b")
            }
            Recipe::Symmetric(k) => permutation_group(*k, false),
            Recipe::Alternating(k) => permutation_group(*k, true),
            Recipe::ElementaryAbelian { p, k } => {
                let (p, k) = (*p, *k);
                let n = p.pow(k as u32);
                let digits = |mut x: usize| -> Vec<usize> {
                    let mut d = vec![0; k];
                    for slot in d.iter_mut() {
                        *slot = x % p;
                        x /= p;
                    }
                    d
                };
                let table = (0..n)
                    .map(|x| {
                        (0..n)
                            .map(|y| {
                                let (dx, dy) = (digits(x), digits(y));
                                dx.iter()
                                    .zip(&dy)
                                    .rev()
                                    .fold(0, |acc, (a, b)| acc * p + (a + b) % p)
                            })
                            .collect()
                    })
                    .collect();
                let labels = (0..n)
                    .map(|x| {
                        let d: Vec<String> = digits(x).iter().map(|v| v.to_string()).collect();
                        format!("({})", d.join(","))
                    })
                    .collect();
                (table, labels)
            }
            Recipe::Direct(a, b) => {
                let (ta, la) = a.raw();
                let (tb, lb) = b.raw();
                let (na, nb) = (ta.len(), tb.len());
                let table = (0..na * nb)
                    .map(|x| {
                        (0..na * nb)
                            .map(|y| ta[x / nb][y / nb] * nb + tb[x % nb][y % nb])
                            .collect()
                    })
                    .collect();
                let labels = (0..na * nb)
                    .map(|x| format!("({},{})", la[x / nb], lb[x % nb]))
                    .collect();
                (table, labels)
            }
        }
    }
}

/// Builds a group from a recipe with the default order cap.
pub fn make_named_group(recipe: &str) -> Result<FiniteGroup> {
    Recipe::parse(recipe)?.build(DEFAULT_ORDER_CAP)
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

fn word(i: usize, j: usize, b: &str) -> String {
    let a_part = match i {
        0 => String::new(),
        1 => "a".to_string(),
        _ => format!("a^{i}"),
    };
    let b_part = match j {
        0 => String::new(),
        1 => b.to_string(),
        _ => format!("{b}^{j}"),
    };
    if a_part.is_empty() && b_part.is_empty() {
        "e".to_string()
    } else {
        a_part + &b_part
    }
}

/// Groups with normal form `a^i b^j`, `i < m`, `j < s`.
///
/// `act(j, k)` rewrites `b^j a^k` as `a^act(j,k) b^j`, and `wrap(j, l)` is the
/// power of `a` produced when `b^j b^l` wraps past `b^s`.
fn metacyclic(
    m: usize,
    s: usize,
    act: impl Fn(usize, usize) -> usize,
    wrap: impl Fn(usize, usize) -> usize,
    b: &str,
) -> (Vec<Vec<usize>>, Vec<String>) {
    let n = m * s;
    let idx = |i: usize, j: usize| i + m * j;
    let table = (0..n)
        .map(|x| {
            let (i, j) = (x % m, x / m);
            (0..n)
                .map(|y| {
                    let (k, l) = (y % m, y / m);
                    let a_pow = (i + act(j, k) + wrap(j, l)) % m;
                    idx(a_pow, (j + l) % s)
                })
                .collect()
        })
        .collect();
    let labels = (0..n).map(|x| word(x % m, x / m, b)).collect();
    (table, labels)
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn rec(k: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in 0..k {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(k, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(k, &mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

fn is_even(p: &[usize]) -> bool {
    let inversions = (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count();
    inversions % 2 == 0
}

/// Cycle notation on points `1..=k`, each cycle led by its least point.
pub(crate) fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push((x + 1).to_string());
            x = p[x];
        }
        out.push('(');
        out.push_str(&cycle.join(","));
        out.push(')');
    }
    if out.is_empty() {
        "id".to_string()
    } else {
        out
    }
}

/// Permutations in lexicographic order of their image lists; the product
/// `p*q` applies `p` first.
fn permutation_group(k: usize, even_only: bool) -> (Vec<Vec<usize>>, Vec<String>) {
    let perms: Vec<Vec<usize>> = permutations(k)
        .into_iter()
        .filter(|p| !even_only || is_even(p))
        .collect();
    let index: std::collections::HashMap<&[usize], usize> =
        perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    let table = perms
        .iter()
        .map(|p| {
            perms
                .iter()
                .map(|q| {
                    let r: Vec<usize> = (0..k).map(|x| q[p[x]]).collect();
                    index[r.as_slice()]
                })
                .collect()
        })
        .collect();
    let labels = perms.iter().map(|p| cycle_notation(p)).collect();
    (table, labels)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn err(&self) -> Error {
        Error::UnknownRecipe(self.src.to_string())
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn ident(&mut self) -> &str {
        self.skip_ws();
        let start = self.pos;
        while self.src[self.pos..].starts_with(|c: char| c.is_ascii_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err())
        }
    }

    fn number(&mut self) -> Result<usize> {
        let word = self.ident();
        word.parse().map_err(|_| Error::UnknownRecipe(self.src.to_string()))
    }

    fn recipe(&mut self) -> Result<Recipe> {
        let name = self.ident().to_ascii_lowercase();
        if name.is_empty() {
            return Err(self.err());
        }
        let with_arg = |this: &mut Self| -> Result<usize> {
            this.expect('(')?;
            let n = this.number()?;
            this.expect(')')?;
            Ok(n)
        };
        let r = match name.as_str() {
            "cyclic" => Recipe::Cyclic(with_arg(self)?),
            "dihedral" => Recipe::Dihedral(with_arg(self)?),
            "symmetric" => Recipe::Symmetric(with_arg(self)?),
            "alternating" => Recipe::Alternating(with_arg(self)?),
            "quaternion8" | "q8" => Recipe::Quaternion8,
            "semidirect_c3_c4" => Recipe::SemidirectC3C4,
            "semidirect_c5_c4" => Recipe::SemidirectC5C4,
            "elementary_abelian" => {
                self.expect('(')?;
                let p = self.number()?;
                self.expect(',')?;
                let k = self.number()?;
                self.expect(')')?;
                Recipe::ElementaryAbelian { p, k }
            }
            "direct" => {
                self.expect('(')?;
                let a = self.recipe()?;
                self.expect(',')?;
                let b = self.recipe()?;
                self.expect(')')?;
                Recipe::Direct(Box::new(a), Box::new(b))
            }
            other => alias(other).ok_or_else(|| self.err())?,
        };
        Ok(r)
    }
}

fn alias(name: &str) -> Option<Recipe> {
    let split = name.find(|c: char| c.is_ascii_digit())?;
    let (head, digits) = name.split_at(split);
    let n: usize = digits.parse().ok()?;
    Some(match head {
        "cyclic" | "c" => Recipe::Cyclic(n),
        "dihedral" | "d" => Recipe::Dihedral(n),
        "sym" | "s" => Recipe::Symmetric(n),
        "alt" | "a" => Recipe::Alternating(n),
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        for text in [
            "cyclic(12)",
            "dihedral(6)",
            "quaternion8",
            "symmetric(4)",
            "alternating(5)",
            "elementary_abelian(2,3)",
            "direct(cyclic(2), direct(cyclic(3), symmetric(3)))",
            "semidirect_c3_c4",
            "semidirect_c5_c4",
        ] {
            let r = Recipe::parse(text).unwrap();
            assert_eq!(Recipe::parse(&r.to_string()).unwrap(), r);
        }
        assert_eq!(Recipe::parse("sym4").unwrap(), Recipe::Symmetric(4));
        assert_eq!(Recipe::parse("cyclic15").unwrap(), Recipe::Cyclic(15));
        assert!(Recipe::parse("frobenius(21)").is_err());
        assert!(Recipe::parse("cyclic(4").is_err());
        assert!(Recipe::parse("cyclic(4) extra").is_err());
    }

    #[test]
    fn orders() {
        assert_eq!(make_named_group("symmetric(4)").unwrap().order(), 24);
        assert_eq!(make_named_group("alternating(4)").unwrap().order(), 12);
        assert_eq!(make_named_group("semidirect_c5_c4").unwrap().order(), 20);
        assert_eq!(make_named_group("semidirect_c3_c4").unwrap().order(), 12);
        assert_eq!(make_named_group("elementary_abelian(3,2)").unwrap().order(), 9);
        let c2c4 = make_named_group("direct(cyclic(2), cyclic(4))").unwrap();
        assert_eq!(c2c4.order(), 8);
        assert!(c2c4.is_abelian());
        assert_eq!(c2c4.elements().map(|g| c2c4.element_order(g)).max(), Some(4));
    }

    #[test]
    fn symmetric_labels() {
        let s4 = make_named_group("symmetric(4)").unwrap();
        assert_eq!(s4.label(0), "id");
        for l in ["(1,2)", "(1,2)(3,4)", "(1,2,3)", "(1,2,3,4)", "(1,3,2,4)", "(1,4,3,2)"] {
            assert!(s4.find_label(l).is_some(), "missing {l}");
        }
        let mut labels = s4.labels().to_vec();
        labels.sort();
        labels.dedup();
        assert_eq!(labels.len(), 24);
    }

    #[test]
    fn presented_relations_hold() {
        let g = make_named_group("semidirect_c5_c4").unwrap();
        let a = g.find_label("a").unwrap();
        let b = g.find_label("b").unwrap();
        assert_eq!(g.element_order(a), 5);
        assert_eq!(g.element_order(b), 4);
        // b^-1 a b a^3 = 1
        let w = g.mul(g.mul(g.mul(g.inv(b), a), b), g.pow(a, 3));
        assert_eq!(w, 0);
        assert!(!g.is_abelian());

        let q = make_named_group("quaternion8").unwrap();
        let orders: Vec<usize> = q.elements().map(|x| q.element_order(x)).collect();
        assert_eq!(orders.iter().filter(|&&o| o == 2).count(), 1);
        assert_eq!(orders.iter().filter(|&&o| o == 4).count(), 6);

        let d6 = make_named_group("dihedral(6)").unwrap();
        let (a, b) = (d6.find_label("a").unwrap(), d6.find_label("b").unwrap());
        let ab = d6.mul(a, b);
        assert_eq!(d6.element_order(ab), 2);
        assert_eq!(d6.element_order(a), 6);

        let c3c4 = make_named_group("semidirect_c3_c4").unwrap();
        let (a, b) = (c3c4.find_label("a").unwrap(), c3c4.find_label("b").unwrap());
        assert_eq!(c3c4.mul(c3c4.mul(c3c4.inv(b), a), b), c3c4.inv(a));
    }

    #[test]
    fn order_cap() {
        let r = Recipe::parse("direct(symmetric(5), symmetric(5))").unwrap();
        assert!(matches!(r.build(DEFAULT_ORDER_CAP), Err(Error::OrderTooLarge { order: 14400, .. })));
        assert!(matches!(make_named_group("symmetric(7)"), Err(Error::UnknownRecipe(_))));
    }
}
