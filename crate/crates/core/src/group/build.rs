//! The group-spec mini-language and the constructor catalog.
//!
//! ```text
//! cyclic:n            dihedral:2n          quaternion:2^k (k >= 3)
//! semidihedral:2^k    modular:p^k          elemabelian:p^k
//! extraspecial:p^3:+  extraspecial:p^3:-   frobenius:q:p (q prime, q = 1 mod p)
//! A4  A5  S4
//! direct(s1,s2)
//! semidirect(N,H,pow:k)      H cyclic, generator acts on abelian N by x -> x^k
//! semidirect(N,H,img:[...])  H cyclic, generator acts by the listed element images
//! centralprod(s1,s2,i=j)     amalgamates <i> in s1 with <j> in s2 (both central)
//! ```
//!
//! Numbers may be written plainly or as `p^k`. Element orderings:
//! metacyclic families list `a^i b^j` at index `j*N + i` (so dihedral is
//! `e, a, ..., a^{n-1}, b, ab, ..., a^{n-1}b`); products list `(x, y)` at
//! `x + |s1|*y`; permutation groups list elements in lexicographic order of
//! their image arrays.

use std::collections::BTreeSet;
use std::fmt;

use super::{factorize, is_prime, Group};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Spec {
    Cyclic(u64),
    Dihedral(u64),
    Quaternion(u64),
    Semidihedral(u64),
    Modular(u64),
    ElemAbelian(u64),
    Extraspecial(u64, bool),
    Frobenius(u64, u64),
    A4,
    A5,
    S4,
    Direct(Box<Spec>, Box<Spec>),
    Semidirect(Box<Spec>, Box<Spec>, Action),
    CentralProd(Box<Spec>, Box<Spec>, usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Action {
    Pow(i64),
    Img(Vec<usize>),
}

fn prime_power_str(n: u64) -> String {
    match factorize(n).as_slice() {
        [(p, k)] if *k > 1 => format!("{p}^{k}"),
        _ => n.to_string(),
    }
}

impl fmt::Display for Spec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Spec::Cyclic(n) => write!(f, "cyclic:{n}"),
            Spec::Dihedral(n) => write!(f, "dihedral:{n}"),
            Spec::Quaternion(n) => write!(f, "quaternion:{}", prime_power_str(*n)),
            Spec::Semidihedral(n) => write!(f, "semidihedral:{}", prime_power_str(*n)),
            Spec::Modular(n) => write!(f, "modular:{}", prime_power_str(*n)),
            Spec::ElemAbelian(n) => write!(f, "elemabelian:{}", prime_power_str(*n)),
            Spec::Extraspecial(n, plus) => write!(f, "extraspecial:{n}:{}", if *plus { '+' } else { '-' }),
            Spec::Frobenius(q, p) => write!(f, "frobenius:{q}:{p}"),
            Spec::A4 => write!(f, "A4"),
            Spec::A5 => write!(f, "A5"),
            Spec::S4 => write!(f, "S4"),
            Spec::Direct(a, b) => write!(f, "direct({a},{b})"),
            Spec::Semidirect(a, b, Action::Pow(k)) => write!(f, "semidirect({a},{b},pow:{k})"),
            Spec::Semidirect(a, b, Action::Img(v)) => {
                let imgs: Vec<String> = v.iter().map(usize::to_string).collect();
                write!(f, "semidirect({a},{b},img:[{}])", imgs.join(" "))
            }
            Spec::CentralProd(a, b, i, j) => write!(f, "centralprod({a},{b},{i}={j})"),
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src, bytes: src.as_bytes(), pos: 0 }
    }

    fn err<T>(&self, reason: impl Into<String>) -> Result<T> {
        Err(Error::MalformedSpec {
            spec: self.src.to_string(),
            reason: format!("{} (at byte {})", reason.into(), self.pos),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected `{}`", c as char))
        }
    }

    fn ident(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_alphanumeric() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a name");
        }
        Ok(&self.src[start..self.pos])
    }

    fn uint(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        self.src[start..self.pos].parse().or_else(|_| self.err("number out of range"))
    }

    fn int(&mut self) -> Result<i64> {
        let neg = self.eat(b'-');
        let v = self.uint()? as i64;
        Ok(if neg { -v } else { v })
    }

    /// `n` or `p^k`.
    fn number(&mut self) -> Result<u64> {
        let base = self.uint()?;
        if self.eat(b'^') {
            let e = self.uint()?;
            base.checked_pow(e as u32).map_or_else(|| self.err("number out of range"), Ok)
        } else {
            Ok(base)
        }
    }

    fn spec(&mut self) -> Result<Spec> {
        let name = self.ident()?;
        let spec = match name {
            "A4" => Spec::A4,
            "A5" => Spec::A5,
            "S4" => Spec::S4,
            "direct" | "semidirect" | "centralprod" => {
                self.expect(b'(')?;
                let a = Box::new(self.spec()?);
                self.expect(b',')?;
                let b = Box::new(self.spec()?);
                let s = match name {
                    "direct" => Spec::Direct(a, b),
                    "semidirect" => {
                        self.expect(b',')?;
                        Spec::Semidirect(a, b, self.action()?)
                    }
                    _ => {
                        self.expect(b',')?;
                        let i = self.uint()? as usize;
                        self.expect(b'=')?;
                        let j = self.uint()? as usize;
                        Spec::CentralProd(a, b, i, j)
                    }
                };
                self.expect(b')')?;
                s
            }
            _ => {
                self.expect(b':')?;
                let n = self.number()?;
                match name {
                    "cyclic" => Spec::Cyclic(n),
                    "dihedral" => Spec::Dihedral(n),
                    "quaternion" => Spec::Quaternion(n),
                    "semidihedral" => Spec::Semidihedral(n),
                    "modular" => Spec::Modular(n),
                    "elemabelian" => Spec::ElemAbelian(n),
                    "frobenius" => {
                        self.expect(b':')?;
                        Spec::Frobenius(n, self.number()?)
                    }
                    "extraspecial" => {
                        self.expect(b':')?;
                        let plus = if self.eat(b'+') {
                            true
                        } else if self.eat(b'-') {
                            false
                        } else {
                            return self.err("expected `+` or `-`");
                        };
                        Spec::Extraspecial(n, plus)
                    }
                    other => return self.err(format!("unknown family `{other}`")),
                }
            }
        };
        Ok(spec)
    }

    fn action(&mut self) -> Result<Action> {
        let kind = self.ident()?;
        match kind {
            "inv" => Ok(Action::Pow(-1)),
            "pow" => {
                self.expect(b':')?;
                Ok(Action::Pow(self.int()?))
            }
            "img" => {
                self.expect(b':')?;
                self.expect(b'[')?;
                let mut v = Vec::new();
                while !self.eat(b']') {
                    v.push(self.uint()? as usize);
                    self.eat(b',');
                }
                Ok(Action::Img(v))
            }
            other => self.err(format!("unknown action `{other}`")),
        }
    }
}

fn parse(src: &str) -> Result<Spec> {
    let mut p = Parser::new(src);
    let spec = p.spec()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(spec)
}

/// Parses a group spec and builds the group. The returned group carries the
/// canonical spelling of `spec`, which rebuilds an identical table.
pub fn build_group(spec: &str) -> Result<Group> {
    let ast = parse(spec)?;
    let g = construct(&ast, spec)?;
    Ok(g.with_spec(ast.to_string()))
}

fn malformed(spec: &str, reason: impl Into<String>) -> Error {
    Error::MalformedSpec { spec: spec.to_string(), reason: reason.into() }
}

fn prime_power(n: u64, src: &str) -> Result<(u64, u32)> {
    match factorize(n).as_slice() {
        [(p, k)] => Ok((*p, *k)),
        _ => Err(malformed(src, format!("{n} is not a prime power"))),
    }
}

fn construct(spec: &Spec, src: &str) -> Result<Group> {
    match spec {
        Spec::Cyclic(n) => {
            if *n == 0 {
                return Err(malformed(src, "order must be positive"));
            }
            metacyclic(*n, 1, 1, 0)
        }
        Spec::Dihedral(order) => {
            if *order == 0 || order % 2 != 0 {
                return Err(malformed(src, "dihedral order must be even and positive"));
            }
            let n = order / 2;
            metacyclic(n, 2, n.saturating_sub(1), 0)
        }
        Spec::Quaternion(order) => {
            let (p, k) = prime_power(*order, src)?;
            if p != 2 || k < 3 {
                return Err(malformed(src, "quaternion needs order 2^k with k >= 3"));
            }
            let n = order / 2;
            metacyclic(n, 2, n - 1, n / 2)
        }
        Spec::Semidihedral(order) => {
            let (p, k) = prime_power(*order, src)?;
            if p != 2 || k < 4 {
                return Err(malformed(src, "semidihedral needs order 2^k with k >= 4"));
            }
            let n = order / 2;
            metacyclic(n, 2, n / 2 - 1, 0)
        }
        Spec::Modular(order) => {
            let (p, k) = prime_power(*order, src)?;
            if k < 3 || (p == 2 && k < 4) {
                return Err(malformed(src, "modular needs p^k with k >= 3 (k >= 4 for p = 2)"));
            }
            let n = order / p;
            metacyclic(n, p, 1 + p.pow(k - 2), 0)
        }
        Spec::ElemAbelian(order) => {
            let (p, k) = if *order == 1 { (2, 0) } else { prime_power(*order, src)? };
            elementary_abelian(p, k)
        }
        Spec::Extraspecial(order, plus) => {
            let (p, k) = prime_power(*order, src)?;
            if k != 3 {
                return Err(malformed(src, "extraspecial groups here have order p^3"));
            }
            match (p, plus) {
                (2, true) => metacyclic(4, 2, 3, 0),
                (2, false) => metacyclic(4, 2, 3, 2),
                (_, true) => heisenberg(p),
                (_, false) => metacyclic(p * p, p, 1 + p, 0),
            }
        }
        Spec::Frobenius(q, p) => {
            if !is_prime(*q) || *p < 2 || (q - 1) % p != 0 {
                return Err(Error::BadFrobeniusParameters { q: *q, p: *p });
            }
            let r = (2..*q)
                .find(|&r| mult_order(r, *q) == *p)
                .ok_or(Error::BadFrobeniusParameters { q: *q, p: *p })?;
            metacyclic(*q, *p, r, 0)
        }
        Spec::A4 => permutation_group(4, &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]]),
        Spec::A5 => permutation_group(5, &[vec![1, 2, 3, 4, 0], vec![1, 2, 0, 3, 4]]),
        Spec::S4 => permutation_group(4, &[vec![1, 2, 3, 0], vec![1, 0, 2, 3]]),
        Spec::Direct(a, b) => {
            let ga = construct(a, src)?;
            let gb = construct(b, src)?;
            Ok(direct(&ga, &gb))
        }
        Spec::Semidirect(a, b, action) => {
            let n = construct(a, src)?;
            let h = construct(b, src)?;
            semidirect(&n, &h, action)
        }
        Spec::CentralProd(a, b, i, j) => {
            let ga = construct(a, src)?;
            let gb = construct(b, src)?;
            central_product(&ga, &gb, *i, *j)
        }
    }
}

fn mult_order(r: u64, q: u64) -> u64 {
    let mut k = 1;
    let mut x = r % q;
    while x != 1 {
        x = x * r % q;
        k += 1;
        if k > q {
            return 0;
        }
    }
    k
}

fn inverse_mod(r: u64, n: u64) -> Option<u64> {
    if n == 1 {
        return Some(0);
    }
    (1..n).find(|&s| (r % n) * s % n == 1)
}

fn power_label(sym: &str, e: u64) -> String {
    match e {
        0 => String::new(),
        1 => sym.to_string(),
        _ => format!("{sym}^{e}"),
    }
}

/// `<a, b | a^n = 1, b^m = a^s, b^{-1} a b = a^r>` with `a^i b^j` at index `j*n + i`.
fn metacyclic(n: u64, m: u64, r: u64, s: u64) -> Result<Group> {
    let r = r % n;
    let rinv = inverse_mod(r, n)
        .ok_or_else(|| Error::InvalidTable(format!("r = {r} is not a unit mod {n}")))?;
    let (nu, mu) = (n as usize, m as usize);
    let order = nu * mu;
    // rpow[j] = r^{-j} mod n
    let mut rpow = vec![1 % n; mu];
    for j in 1..mu {
        rpow[j] = rpow[j - 1] * rinv % n;
    }
    let mut mul = vec![0u32; order * order];
    for j1 in 0..mu {
        for i1 in 0..nu {
            for j2 in 0..mu {
                for i2 in 0..nu {
                    let mut i = i1 as u64 + (i2 as u64) * rpow[j1];
                    let mut j = j1 + j2;
                    if j >= mu {
                        j -= mu;
                        i += s;
                    }
                    let i = (i % n) as usize;
                    mul[(j1 * nu + i1) * order + j2 * nu + i2] = (j * nu + i) as u32;
                }
            }
        }
    }
    let labels = (0..order)
        .map(|x| {
            let (i, j) = ((x % nu) as u64, (x / nu) as u64);
            let l = format!("{}{}", power_label("a", i), power_label("b", j));
            if l.is_empty() {
                "e".to_string()
            } else {
                l
            }
        })
        .collect();
    Group::from_table(mul, labels, "")
}

fn elementary_abelian(p: u64, k: u32) -> Result<Group> {
    let (p, k) = (p as usize, k as usize);
    let order = p.pow(k as u32);
    let digits = |mut x: usize| -> Vec<usize> {
        (0..k)
            .map(|_| {
                let d = x % p;
                x /= p;
                d
            })
            .collect()
    };
    let mut mul = vec![0u32; order * order];
    for x in 0..order {
        let dx = digits(x);
        for y in 0..order {
            let dy = digits(y);
            let z = dx.iter().zip(&dy).rev().fold(0, |acc, (a, b)| acc * p + (a + b) % p);
            mul[x * order + y] = z as u32;
        }
    }
    let labels = (0..order)
        .map(|x| {
            if x == 0 {
                "e".to_string()
            } else {
                let d: Vec<String> = digits(x).iter().map(usize::to_string).collect();
                format!("({})", d.join(","))
            }
        })
        .collect();
    Group::from_table(mul, labels, "")
}

/// `(x, y, z)(x', y', z') = (x + x', y + y', z + z' + x y')` over `Z_p`.
fn heisenberg(p: u64) -> Result<Group> {
    let p = p as usize;
    let order = p * p * p;
    let split = |v: usize| (v % p, (v / p) % p, v / (p * p));
    let mut mul = vec![0u32; order * order];
    for u in 0..order {
        let (x, y, z) = split(u);
        for v in 0..order {
            let (x2, y2, z2) = split(v);
            let w = (x + x2) % p + p * ((y + y2) % p) + p * p * ((z + z2 + x * y2) % p);
            mul[u * order + v] = w as u32;
        }
    }
    let labels = (0..order)
        .map(|v| {
            let (x, y, z) = split(v);
            let l = format!("{}{}{}", power_label("x", x as u64), power_label("y", y as u64), power_label("z", z as u64));
            if l.is_empty() {
                "e".to_string()
            } else {
                l
            }
        })
        .collect();
    Group::from_table(mul, labels, "")
}

fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    // apply p, then q
    p.iter().map(|&x| q[x]).collect()
}

fn cycle_label(perm: &[usize]) -> String {
    let mut seen = vec![false; perm.len()];
    let mut out = String::new();
    for start in 0..perm.len() {
        if seen[start] || perm[start] == start {
            continue;
        }
        let mut cyc = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cyc.push((x + 1).to_string());
            x = perm[x];
        }
        out.push_str(&format!("({})", cyc.join(" ")));
    }
    if out.is_empty() {
        "e".to_string()
    } else {
        out
    }
}

fn permutation_group(degree: usize, gens: &[Vec<usize>]) -> Result<Group> {
    let id: Vec<usize> = (0..degree).collect();
    let mut elems: BTreeSet<Vec<usize>> = BTreeSet::from([id.clone()]);
    let mut frontier = vec![id];
    while let Some(p) = frontier.pop() {
        for g in gens {
            let q = compose(&p, g);
            if elems.insert(q.clone()) {
                frontier.push(q);
            }
        }
    }
    let elems: Vec<Vec<usize>> = elems.into_iter().collect();
    let index = |p: &Vec<usize>| elems.binary_search(p).expect("closed");
    let order = elems.len();
    let mut mul = vec![0u32; order * order];
    for (i, a) in elems.iter().enumerate() {
        for (j, b) in elems.iter().enumerate() {
            mul[i * order + j] = index(&compose(a, b)) as u32;
        }
    }
    let labels = elems.iter().map(|p| cycle_label(p)).collect();
    Group::from_table(mul, labels, "")
}

fn direct(a: &Group, b: &Group) -> Group {
    let (na, nb) = (a.order(), b.order());
    let order = na * nb;
    let mut mul = vec![0u32; order * order];
    for x in 0..order {
        for y in 0..order {
            let z = a.mul(x % na, y % na) + na * b.mul(x / na, y / na);
            mul[x * order + y] = z as u32;
        }
    }
    let labels = (0..order)
        .map(|x| if x == 0 { "e".to_string() } else { format!("({},{})", a.label(x % na), b.label(x / na)) })
        .collect();
    Group::from_table(mul, labels, "").expect("direct products of groups are groups")
}

fn semidirect(n: &Group, h: &Group, action: &Action) -> Result<Group> {
    let nn = n.order();
    let nh = h.order();
    if nh > 1 && h.elem_order(1) != nh {
        return Err(Error::NotAnAutomorphism("acting group must be cyclic, generated by element 1".into()));
    }
    let alpha: Vec<usize> = match action {
        Action::Pow(k) => {
            if !n.is_abelian() {
                return Err(Error::NotAnAutomorphism("power maps need an abelian normal factor".into()));
            }
            (0..nn).map(|x| n.pow(x, *k)).collect()
        }
        Action::Img(v) => v.clone(),
    };
    if alpha.len() != nn || alpha[0] != 0 {
        return Err(Error::NotAnAutomorphism("image list must fix the identity and cover N".into()));
    }
    let mut hit = vec![false; nn];
    for &a in &alpha {
        if a >= nn || hit[a] {
            return Err(Error::NotAnAutomorphism("map is not a bijection".into()));
        }
        hit[a] = true;
    }
    for x in 0..nn {
        for y in 0..nn {
            if alpha[n.mul(x, y)] != n.mul(alpha[x], alpha[y]) {
                return Err(Error::NotAnAutomorphism("map is not a homomorphism".into()));
            }
        }
    }
    // phi[i] = alpha^i, indexed by the exponent of the generator
    let mut phi: Vec<Vec<usize>> = vec![(0..nn).collect()];
    for i in 1..=nh {
        let prev = &phi[i - 1];
        phi.push(prev.iter().map(|&x| alpha[x]).collect());
    }
    if phi[nh].iter().enumerate().any(|(i, &x)| i != x) {
        return Err(Error::NotAnAutomorphism("generator order is not a multiple of the automorphism order".into()));
    }
    let mut exp_of = vec![0usize; nh];
    let mut g = 0;
    for i in 0..nh {
        exp_of[g] = i;
        g = h.mul(g, if nh > 1 { 1 } else { 0 });
    }
    let order = nn * nh;
    let mut mul = vec![0u32; order * order];
    for x in 0..order {
        let (n1, h1) = (x % nn, x / nn);
        for y in 0..order {
            let (n2, h2) = (y % nn, y / nn);
            let z = n.mul(n1, phi[exp_of[h1]][n2]) + nn * h.mul(h1, h2);
            mul[x * order + y] = z as u32;
        }
    }
    let labels = (0..order)
        .map(|x| if x == 0 { "e".to_string() } else { format!("({},{})", n.label(x % nn), h.label(x / nn)) })
        .collect();
    Group::from_table(mul, labels, "")
}

fn central_product(a: &Group, b: &Group, i: usize, j: usize) -> Result<Group> {
    if i >= a.order() || j >= b.order() {
        return Err(Error::AmalgamNotCentral("amalgam index out of range".into()));
    }
    if !a.center().contains(i) || !b.center().contains(j) {
        return Err(Error::AmalgamNotCentral(format!("{i} or {j} is not central")));
    }
    if a.elem_order(i) != b.elem_order(j) {
        return Err(Error::AmalgamNotCentral("amalgamated elements have different orders".into()));
    }
    let d = direct(a, b);
    let na = a.order();
    let z = d.generated_subgroup(&[i + na * b.inv(j)]);
    let s = d.quotient_group(&z)?;
    let q = s.quotient();
    let labels = (0..q.order())
        .map(|x| {
            if x == 0 {
                "e".to_string()
            } else {
                d.label(s.representative(x)).to_string()
            }
        })
        .collect();
    Group::from_table(q.table().to_vec(), labels, "")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_round_trips() {
        for s in [
            "cyclic:12",
            "dihedral:16",
            "quaternion:2^4",
            "semidihedral:2^5",
            "modular:3^3",
            "modular:2^4",
            "elemabelian:5^2",
            "extraspecial:27:+",
            "extraspecial:27:-",
            "frobenius:11:5",
            "A4",
            "A5",
            "S4",
            "direct(cyclic:4,cyclic:2)",
            "semidirect(cyclic:3,cyclic:4,pow:-1)",
            "semidirect(cyclic:5,cyclic:4,img:[0 2 4 1 3])",
            "centralprod(quaternion:2^3,cyclic:4,2=2)",
        ] {
            let g = build_group(s).unwrap();
            assert_eq!(g.spec(), s);
            let again = build_group(g.spec()).unwrap();
            assert_eq!(again, g, "{s}");
        }
        assert_eq!(build_group("quaternion:16").unwrap().spec(), "quaternion:2^4");
        assert_eq!(build_group("elemabelian:4").unwrap().spec(), "elemabelian:2^2");
    }

    #[test]
    fn orders() {
        for (s, n) in [
            ("A5", 60),
            ("S4", 24),
            ("A4", 12),
            ("frobenius:5:4", 20),
            ("frobenius:7:3", 21),
            ("extraspecial:27:+", 27),
            ("modular:2^5", 32),
            ("centralprod(quaternion:8,cyclic:4,2=2)", 16),
            ("dihedral:2", 2),
            ("dihedral:4", 4),
            ("cyclic:1", 1),
        ] {
            assert_eq!(build_group(s).unwrap().order(), n, "{s}");
        }
    }

    #[test]
    fn dihedral_presentation() {
        // a^8 = b^2 = e, b^{-1} a b = a^{-1}
        let g = build_group("dihedral:16").unwrap();
        let (a, b) = (1, 8);
        assert_eq!(g.label(a), "a");
        assert_eq!(g.label(b), "b");
        assert_eq!(g.label(9), "ab");
        assert_eq!(g.elem_order(a), 8);
        assert_eq!(g.elem_order(b), 2);
        assert_eq!(g.conj(a, b), g.inv(a));
        assert_eq!(g.mul(a, b), 9);
    }

    #[test]
    fn family_invariants() {
        let q = build_group("quaternion:16").unwrap();
        assert_eq!((0..16).filter(|&x| q.elem_order(x) == 2).count(), 1);
        let sd = build_group("semidihedral:16").unwrap();
        assert_eq!(sd.center().order(), 2);
        assert_eq!((0..16).filter(|&x| sd.elem_order(x) == 2).count(), 5);
        let m = build_group("modular:16").unwrap();
        assert!(!m.is_abelian());
        assert_eq!(m.center().order(), 4);
        let h = build_group("extraspecial:27:+").unwrap();
        assert_eq!(h.exponent(), 3);
        let e = build_group("extraspecial:27:-").unwrap();
        assert_eq!(e.exponent(), 9);
        assert!(!e.is_abelian());
        let x = build_group("extraspecial:8:-").unwrap();
        assert_eq!(x, build_group("quaternion:8").unwrap());
        let f = build_group("frobenius:5:4").unwrap();
        assert_eq!(f.center().order(), 1);
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(matches!(build_group("cyclic"), Err(Error::MalformedSpec { .. })));
        assert!(matches!(build_group("dihedral:7"), Err(Error::MalformedSpec { .. })));
        assert!(matches!(build_group("quaternion:12"), Err(Error::MalformedSpec { .. })));
        assert!(matches!(build_group("blob:3"), Err(Error::MalformedSpec { .. })));
        assert!(matches!(build_group("direct(cyclic:2"), Err(Error::MalformedSpec { .. })));
        assert_eq!(build_group("frobenius:7:4"), Err(Error::BadFrobeniusParameters { q: 7, p: 4 }));
        assert!(matches!(
            build_group("semidirect(cyclic:5,cyclic:4,img:[0 2 2 1 3])"),
            Err(Error::NotAnAutomorphism(_))
        ));
        assert!(matches!(
            build_group("semidirect(cyclic:5,cyclic:3,pow:2)"),
            Err(Error::NotAnAutomorphism(_))
        ));
        assert!(matches!(
            build_group("centralprod(dihedral:8,cyclic:4,1=1)"),
            Err(Error::AmalgamNotCentral(_))
        ));
    }
}
