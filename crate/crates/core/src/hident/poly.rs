use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::{add_scaled, Matrix, Scalar};
use crate::modulealg::ModuleStructure;

/// `coef * x_{perm[0]}^{h[0]} ... x_{perm[n-1]}^{h[n-1]}`, variables 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HTerm<S> {
    pub coef: S,
    pub perm: Vec<usize>,
    pub h: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultilinearHPolynomial<S> {
    pub n: usize,
    pub terms: Vec<HTerm<S>>,
}

impl<S: Scalar> MultilinearHPolynomial<S> {
    /// Collects like terms and sorts by `(perm, h)`.
    pub fn new(n: usize, terms: Vec<(S, Vec<usize>, Vec<usize>)>) -> Result<MultilinearHPolynomial<S>> {
        let mut m: BTreeMap<(Vec<usize>, Vec<usize>), S> = BTreeMap::new();
        for (c, perm, h) in terms {
            if perm.len() != n || h.len() != n {
                return Err(Error::Parse(format!("term has {} variables, expected {n}", perm.len())));
            }
            let mut seen = vec![false; n];
            for &v in &perm {
                if v >= n || seen[v] {
                    return Err(Error::Parse("each variable must occur exactly once per term".into()));
                }
                seen[v] = true;
            }
            let e = m.entry((perm, h)).or_insert_with(S::zero);
            *e = e.clone() + c;
        }
        let terms = m
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|((perm, h), coef)| HTerm { coef, perm, h })
            .collect();
        Ok(MultilinearHPolynomial { n, terms })
    }

    pub fn zero(n: usize) -> MultilinearHPolynomial<S> {
        MultilinearHPolynomial { n, terms: Vec::new() }
    }

    /// Parses e.g. `x1^{h:0} x2^{h:1} - 1/2 x2^{h:1} x1^{h:0}`. A bare `x1`
    /// means the unit of `H`, which must then be a basis vector; `h:` may be
    /// followed by an index or a basis name.
    pub fn parse(src: &str, h_names: &[String], unit_index: Option<usize>) -> Result<MultilinearHPolynomial<S>> {
        let mut p = Parser { s: src.as_bytes(), i: 0 };
        let mut raw: Vec<(S, Vec<(usize, usize)>)> = Vec::new();
        p.ws();
        if p.peek() == Some(b'0') && p.s[p.i..].iter().all(|c| *c == b'0' || c.is_ascii_whitespace()) {
            return Ok(MultilinearHPolynomial::zero(0));
        }
        let mut first = true;
        while p.peek().is_some() {
            let mut sign = S::one();
            match p.peek() {
                Some(b'+') => p.i += 1,
                Some(b'-') => {
                    p.i += 1;
                    sign = -sign;
                }
                _ if !first => return Err(p.err("expected '+' or '-'")),
                _ => {}
            }
            first = false;
            p.ws();
            let mut coef = sign;
            if matches!(p.peek(), Some(c) if c.is_ascii_digit()) {
                let lit = p.take_while(|c| c.is_ascii_digit() || c == b'/');
                coef = coef * S::parse_literal(&lit)?;
                p.ws();
                if p.peek() == Some(b'*') {
                    p.i += 1;
                    p.ws();
                }
            }
            let mut factors = Vec::new();
            while p.peek() == Some(b'x') {
                p.i += 1;
                let var = p.take_while(|c| c.is_ascii_digit());
                let var: usize = var.parse().map_err(|_| p.err("expected variable number"))?;
                if var == 0 {
                    return Err(p.err("variables are numbered from 1"));
                }
                let h = if p.peek() == Some(b'^') {
                    p.i += 1;
                    if p.peek() != Some(b'{') {
                        return Err(p.err("expected '{'"));
                    }
                    p.i += 1;
                    let body = p.take_while(|c| c != b'}');
                    if p.peek() != Some(b'}') {
                        return Err(p.err("unclosed '{'"));
                    }
                    p.i += 1;
                    let key = body.trim();
                    let key = key.strip_prefix("h:").unwrap_or(key).trim();
                    match key.parse::<usize>() {
                        Ok(k) => k,
                        Err(_) => h_names
                            .iter()
                            .position(|n| n == key)
                            .ok_or_else(|| Error::Parse(format!("unknown H basis element {key:?}")))?,
                    }
                } else {
                    unit_index.ok_or_else(|| Error::Parse("bare variable needs the unit of H to be a basis vector".into()))?
                };
                if h >= h_names.len() {
                    return Err(Error::Parse(format!("H basis index {h} out of range")));
                }
                factors.push((var - 1, h));
                p.ws();
                if p.peek() == Some(b'*') {
                    p.i += 1;
                    p.ws();
                }
            }
            if factors.is_empty() {
                return Err(p.err("expected a monomial"));
            }
            raw.push((coef, factors));
            p.ws();
        }
        let n = raw.iter().map(|(_, f)| f.len()).max().unwrap_or(0);
        let terms = raw
            .into_iter()
            .map(|(c, f)| (c, f.iter().map(|x| x.0).collect(), f.iter().map(|x| x.1).collect()))
            .collect();
        MultilinearHPolynomial::new(n, terms)
    }

    /// `x_k^h -> x_k^{xi(h)}` with `xi(h)` given in coordinates of the new `H`.
    pub fn transport(&self, xi: &[Vec<S>]) -> Result<MultilinearHPolynomial<S>> {
        let mut out = Vec::new();
        for t in &self.terms {
            let mut partial: Vec<(S, Vec<usize>)> = vec![(t.coef.clone(), Vec::new())];
            for &h in &t.h {
                let img = xi.get(h).ok_or_else(|| Error::InvalidParams(format!("no image for H basis index {h}")))?;
                partial = partial
                    .into_iter()
                    .flat_map(|(c, hs)| {
                        img.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(move |(k, x)| {
                            let mut hs = hs.clone();
                            hs.push(k);
                            (c.clone() * x.clone(), hs)
                        })
                    })
                    .collect();
            }
            out.extend(partial.into_iter().map(|(c, hs)| (c, t.perm.clone(), hs)));
        }
        MultilinearHPolynomial::new(self.n, out)
    }

    fn check_against(&self, z: &ModuleStructure<S>) -> Result<()> {
        if self.terms.iter().flat_map(|t| &t.h).any(|&h| h >= z.hopf.dim()) {
            return Err(Error::InvalidParams("H basis index out of range".into()));
        }
        Ok(())
    }

    /// The value at `x_i = a_{args[i]}`, multiplied left to right.
    pub fn evaluate(&self, z: &ModuleStructure<S>, args: &[usize]) -> Result<Vec<S>> {
        self.check_against(z)?;
        let n = z.algebra.dim();
        if args.len() != self.n || args.iter().any(|&a| a >= n) {
            return Err(Error::InvalidParams("argument indices out of range".into()));
        }
        let mut acc = vec![S::zero(); n];
        for t in &self.terms {
            let v = eval_monomial(z, &t.perm, &t.h, args);
            add_scaled(&mut acc, &t.coef, &v);
        }
        Ok(acc)
    }

    /// `None` if the polynomial vanishes on all basis tuples, otherwise the
    /// first tuple where it does not.
    pub fn identity_witness(&self, z: &ModuleStructure<S>) -> Result<Option<Vec<usize>>> {
        self.check_against(z)?;
        let n = z.algebra.dim();
        let total = n.checked_pow(self.n as u32).ok_or_else(|| Error::InvalidParams("degree too large".into()))?;
        for idx in 0..total {
            let args = digits(idx, n, self.n);
            if !crate::exactlin::is_zero_vec(&self.evaluate(z, &args)?) {
                return Ok(Some(args));
            }
        }
        Ok(None)
    }

    pub fn is_identity(&self, z: &ModuleStructure<S>) -> Result<bool> {
        Ok(self.identity_witness(z)?.is_none())
    }
}

impl<S: Scalar> std::fmt::Display for MultilinearHPolynomial<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, t) in self.terms.iter().enumerate() {
            let c = t.coef.to_string();
            let (sign, mag) = match c.strip_prefix('-') {
                Some(m) => ("-", m.to_string()),
                None => ("+", c),
            };
            if k > 0 {
                write!(f, " {sign} ")?;
            } else if sign == "-" {
                write!(f, "-")?;
            }
            if mag != "1" {
                write!(f, "{mag} ")?;
            }
            let mono: Vec<String> = t.perm.iter().zip(&t.h).map(|(v, h)| format!("x{}^{{h:{h}}}", v + 1)).collect();
            write!(f, "{}", mono.join(" "))?;
        }
        Ok(())
    }
}

/// Base-`b` digits of `idx`, most significant first, padded to `len`.
pub(crate) fn digits(mut idx: usize, b: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for k in (0..len).rev() {
        out[k] = idx % b;
        idx /= b;
    }
    out
}

pub(crate) fn eval_monomial<S: Scalar>(z: &ModuleStructure<S>, perm: &[usize], h: &[usize], args: &[usize]) -> Vec<S> {
    let mut acc: Option<Vec<S>> = None;
    for (k, &v) in perm.iter().enumerate() {
        let x = z.action[h[k]].column(args[v]);
        acc = Some(match acc {
            None => x,
            Some(a) => z.algebra.product(&a, &x),
        });
    }
    acc.unwrap_or_default()
}

/// For every basis element `h` of `H1`, some `xi(h)` in `H2` with
/// `zeta2(xi(h)) = phi zeta1(h) phi^-1`.
pub fn transport_map<S: Scalar>(z1: &ModuleStructure<S>, z2: &ModuleStructure<S>, phi: &Matrix<S>) -> Result<Vec<Vec<S>>> {
    let phi_inv = z1.algebra.check_isomorphism(&z2.algebra, phi)?;
    let n = z2.algebra.dim();
    let cols: Vec<Vec<S>> = z2.action.iter().map(|m| m.as_flat().to_vec()).collect();
    let solver = Matrix::from_columns(&cols, n * n)?;
    z1.action
        .iter()
        .map(|m| {
            solver
                .solve(m.conjugate_by(phi, &phi_inv).as_flat())?
                .ok_or_else(|| Error::Precondition("structures are not support-equivalent".into()))
        })
        .collect()
}

struct Parser<'a> {
    s: &'a [u8],
    i: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<u8> {
        self.s.get(self.i).copied()
    }

    fn ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.i += 1;
        }
    }

    fn take_while(&mut self, f: impl Fn(u8) -> bool) -> String {
        let start = self.i;
        while matches!(self.peek(), Some(c) if f(c)) {
            self.i += 1;
        }
        String::from_utf8_lossy(&self.s[start..self.i]).into_owned()
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {}", self.i))
    }
}
