//! Text forms accepted on the command line: eta expressions, radical
//! recipes for Mahler arguments, and lattice-sum specs.

use std::collections::HashMap;

use latticelab_core::lattice::LatticeSpec;
use latticelab_core::mahler::{catalog_argument, MahlerArg, Radical};
use latticelab_core::series::{EtaExpression, EtaMonomial};
use num_rational::Ratio;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse `{input}` at byte {pos}: {msg}")]
pub struct ParseError {
    pub input: String,
    pub pos: usize,
    pub msg: String,
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { input: self.src.to_string(), pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.rest().starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected `{c}`"))
        }
    }

    fn eat_word(&mut self, w: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(w) {
            self.pos += w.len();
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let len = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return self.err("expected an integer");
        }
        let s = &self.rest()[..len];
        self.pos += len;
        s.parse().or_else(|_| self.err("integer too large"))
    }

    fn ident(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let len = self.rest().bytes().take_while(|b| b.is_ascii_alphanumeric() || *b == b'_').count();
        let first = self.rest().bytes().next()?;
        if len == 0 || first.is_ascii_digit() {
            return None;
        }
        let s = &self.rest()[..len];
        self.pos += len;
        Some(s)
    }

    fn done(&mut self) -> Result<(), ParseError> {
        self.skip_ws();
        if self.pos < self.src.len() {
            return self.err("unexpected trailing input");
        }
        Ok(())
    }
}

/// `p` or `p/q`, optionally signed.
pub fn parse_ratio(s: &str) -> Result<Ratio<i64>, ParseError> {
    let mut c = Cursor::new(s);
    let neg = c.eat('-');
    let n = c.int()?;
    let d = if c.eat('/') { c.int()? } else { 1 };
    c.done()?;
    if d == 0 {
        return c.err("zero denominator");
    }
    Ok(Ratio::new(if neg { -n } else { n }, d))
}

/// Eta expressions such as `e2 e6 e10 e30 - e1 e12 e15 e20 - e3 e4 e5 e60`,
/// `3*e1^3 e18^2/e9` or `eta(q^4) eta(q^7)^2 eta(q^28)`.
///
/// A term is an optional rational coefficient followed by factors; factors
/// after `/` are divided out. `e_j` and `eta(q^j)` both denote `η(q^j)`.
pub fn parse_eta_expression(s: &str) -> Result<EtaExpression, ParseError> {
    let mut c = Cursor::new(s);
    let mut out = EtaExpression::new();
    let mut sign = if c.eat('-') {
        -1
    } else {
        c.eat('+');
        1
    };
    loop {
        let (coeff, mono) = eta_term(&mut c)?;
        out.push(coeff * sign, mono);
        if c.eat('+') {
            sign = 1;
        } else if c.eat('-') {
            sign = -1;
        } else {
            break;
        }
    }
    c.done()?;
    Ok(out)
}

fn eta_term(c: &mut Cursor) -> Result<(Ratio<i64>, EtaMonomial), ParseError> {
    let mut coeff = Ratio::from_integer(1);
    if c.peek().is_some_and(|ch| ch.is_ascii_digit()) {
        let n = c.int()?;
        // `3/4 e1` is a coefficient; `3/e1` divides
        let save = c.pos;
        if c.eat('/') && c.peek().is_some_and(|ch| ch.is_ascii_digit()) {
            coeff = Ratio::new(n, c.int()?);
        } else {
            c.pos = save;
            coeff = Ratio::from_integer(n);
        }
        c.eat('*');
    }
    let mut factors: Vec<(u32, i32)> = Vec::new();
    let mut divide = false;
    loop {
        match eta_factor(c)? {
            Some((j, e)) => factors.push((j, if divide { -e } else { e })),
            None if factors.is_empty() && coeff != Ratio::from_integer(1) => break,
            None => return c.err("expected an eta factor `e<j>` or `eta(q^<j>)`"),
        }
        if c.eat('*') {
            continue;
        }
        if c.eat('/') {
            divide = true;
            continue;
        }
        match c.peek() {
            Some('e') => {}
            _ => break,
        }
    }
    let mono = EtaMonomial::new(factors).or_else(|e| c.err(e.to_string()))?;
    Ok((coeff, mono))
}

fn eta_factor(c: &mut Cursor) -> Result<Option<(u32, i32)>, ParseError> {
    let j = if c.eat_word("eta(q") {
        let j = if c.eat('^') { c.int()? } else { 1 };
        c.expect(')')?;
        j
    } else if c.peek() == Some('e') {
        c.pos += 1;
        c.eat('_');
        if c.eat('{') {
            let j = c.int()?;
            c.expect('}')?;
            j
        } else {
            c.int()?
        }
    } else {
        return Ok(None);
    };
    let e = if c.eat('^') {
        let neg = c.eat('-');
        let e = c.int()? as i32;
        if neg {
            -e
        } else {
            e
        }
    } else {
        1
    };
    if j <= 0 || j > u32::MAX as i64 {
        return c.err("eta scale must be a positive integer");
    }
    Ok(Some((j as u32, e)))
}

/// Radical recipes for Mahler arguments: `4*i`, `(1+sqrt(17))^2/4`,
/// `t=12^(1/4); (4-2t-2t^2+t^3)/sqrt(2)`, `4*sqrt(alpha25)`. Bindings may
/// also trail after a comma, as in the catalogued labels. Juxtaposition
/// multiplies (`2t`, `4i`).
pub fn parse_recipe(s: &str) -> Result<MahlerArg, ParseError> {
    if let Some(a) = catalog_argument(s.trim()) {
        return Ok(a);
    }
    let (body, bindings) = split_bindings(s);
    let mut env = HashMap::new();
    for b in bindings {
        let Some((name, expr)) = b.split_once('=') else {
            return Err(ParseError { input: s.into(), pos: 0, msg: format!("binding `{b}` lacks `=`") });
        };
        let v = recipe_expr(expr, &env)?;
        env.insert(name.trim().to_string(), v);
    }
    Ok(MahlerArg::new(s.trim(), recipe_expr(body, &env)?))
}

/// Splits `a=..; b=..; body` or `body, a=.., b=..` into body and bindings.
fn split_bindings(s: &str) -> (&str, Vec<&str>) {
    let parts: Vec<&str> = s.split(';').collect();
    if parts.len() > 1 {
        let (body, binds) = parts.split_last().expect("nonempty");
        return (body, binds.to_vec());
    }
    let parts: Vec<&str> = s.split(',').collect();
    let body = parts[0];
    (body, parts[1..].to_vec())
}

fn recipe_expr(s: &str, env: &HashMap<String, Radical>) -> Result<Radical, ParseError> {
    let mut c = Cursor::new(s);
    let v = sum(&mut c, env)?;
    c.done()?;
    Ok(v)
}

fn sum(c: &mut Cursor, env: &HashMap<String, Radical>) -> Result<Radical, ParseError> {
    let mut v = if c.eat('-') { Radical::Neg(Box::new(product(c, env)?)) } else { product(c, env)? };
    loop {
        if c.eat('+') {
            v = v + product(c, env)?;
        } else if c.eat('-') {
            v = v - product(c, env)?;
        } else {
            return Ok(v);
        }
    }
}

fn product(c: &mut Cursor, env: &HashMap<String, Radical>) -> Result<Radical, ParseError> {
    let mut v = power(c, env)?;
    loop {
        if c.eat('*') {
            v = v * power(c, env)?;
        } else if c.eat('/') {
            v = v / power(c, env)?;
        } else if c.peek().is_some_and(|ch| ch == '(' || ch.is_ascii_alphabetic()) {
            v = v * power(c, env)?;
        } else {
            return Ok(v);
        }
    }
}

fn power(c: &mut Cursor, env: &HashMap<String, Radical>) -> Result<Radical, ParseError> {
    let base = atom(c, env)?;
    if !c.eat('^') {
        return Ok(base);
    }
    let exp = if c.eat('(') {
        let neg = c.eat('-');
        let n = c.int()?;
        let d = if c.eat('/') { c.int()? } else { 1 };
        c.expect(')')?;
        Ratio::new(if neg { -n } else { n }, d)
    } else {
        let neg = c.eat('-');
        let n = c.int()?;
        Ratio::from_integer(if neg { -n } else { n })
    };
    Ok(base.pow(exp))
}

fn atom(c: &mut Cursor, env: &HashMap<String, Radical>) -> Result<Radical, ParseError> {
    if c.eat('(') {
        let v = sum(c, env)?;
        c.expect(')')?;
        return Ok(v);
    }
    if c.peek().is_some_and(|ch| ch.is_ascii_digit()) {
        return Ok(Radical::int(c.int()?));
    }
    let Some(name) = c.ident() else {
        return c.err("expected a number, `i`, a function or a bound name");
    };
    if let Some(v) = env.get(name) {
        return Ok(v.clone());
    }
    match name {
        "i" => Ok(Radical::I),
        "sqrt" | "cbrt" => {
            c.expect('(')?;
            let v = sum(c, env)?;
            c.expect(')')?;
            Ok(if name == "sqrt" { v.sqrt() } else { v.pow(Ratio::new(1, 3)) })
        }
        "alpha" => {
            c.expect('(')?;
            let n = c.int()?;
            let d = if c.eat('/') { c.int()? } else { 1 };
            c.expect(')')?;
            Ok(Radical::Alpha(Ratio::new(n, d)))
        }
        _ => match name.strip_prefix("alpha").and_then(|n| n.parse::<i64>().ok()) {
            Some(n) if n > 0 => Ok(Radical::Alpha(Ratio::from_integer(n))),
            _ => c.err(format!("unknown name `{name}`")),
        },
    }
}

/// `F a b c d` or `F b c` (shorthand for `F(1, b, c, bc)`), entries as `p/q`.
pub fn parse_lattice_spec<S: AsRef<str>>(args: &[S]) -> Result<LatticeSpec, ParseError> {
    let words: Vec<&str> = args.iter().flat_map(|a| a.as_ref().split_whitespace()).collect();
    let bad = |msg: &str| ParseError { input: words.join(" "), pos: 0, msg: msg.into() };
    let rest = match words.split_first() {
        Some((&"F", rest)) => rest,
        _ => words.as_slice(),
    };
    let nums: Vec<Ratio<i64>> = rest.iter().map(|w| parse_ratio(w)).collect::<Result<_, _>>()?;
    let spec = match nums.as_slice() {
        [b, c] => LatticeSpec::shorthand(*b, *c),
        [a, b, c, d] => LatticeSpec::new([*a, *b, *c, *d]),
        _ => return Err(bad("expected `F b c` or `F a b c d`")),
    };
    spec.map_err(|e| bad(&e.to_string()))
}
