//! Expression grammar for elements of an instance.
//!
//! ```text
//! expr   := ('+'|'-')? term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := rational | generator | '(' expr ')'
//! rational := integer ('/' integer)?
//! ```
//!
//! A bare rational stands for that multiple of the unit. `*` scales when one
//! side is a rational and is the instance product otherwise. Generator
//! literals are instance-specific: `x`, `x^n` for polynomials, lowercase
//! words, `(w₁)(w₂)…` weighted words, and `T[...]` trees joined by `*` into
//! forests.

use num::{BigInt, BigRational, Zero};
use thiserror::Error;

use crate::coalgebra::Coalgebra;
use crate::freemod::{Element, Scalar};
use crate::hopf::Bialgebra;
use crate::instances::{
    BrokenShuffle, ConnesKreimer, Forest, Monomial, Polynomial, QuasiShuffle, Shuffle, WeightedWord, Word,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown generator {text:?} at position {position}")]
    UnknownGenerator { position: usize, text: String },
    #[error("product of two elements at position {position} needs an algebra; this context is coalgebra-only")]
    ProductNotAllowed { position: usize },
}

fn syntax(position: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { position, message: message.into() }
}

/// How an instance spells its generators.
pub trait Syntax: Coalgebra {
    /// Reads a generator literal at the start of `s`: `None` if `s` does not
    /// begin one, `Some(Err(_))` if it begins one that is malformed.
    fn lex_generator(&self, s: &str) -> Option<Result<(Self::Key, usize), String>>;
}

fn leading_digits(s: &str) -> usize {
    s.bytes().take_while(u8::is_ascii_digit).count()
}

impl Syntax for Polynomial {
    fn lex_generator(&self, s: &str) -> Option<Result<(Monomial, usize), String>> {
        if !s.starts_with('x') {
            return None;
        }
        let rest = &s[1..];
        if !rest.starts_with('^') {
            return Some(Ok((Monomial(1), 1)));
        }
        let digits = leading_digits(&rest[1..]);
        if digits == 0 {
            return Some(Err("expected an exponent after '^'".into()));
        }
        Some(
            rest[1..1 + digits]
                .parse::<u32>()
                .map(|n| (Monomial(n), 2 + digits))
                .map_err(|e| format!("bad exponent: {e}")),
        )
    }
}

fn lex_word(s: &str) -> Option<Result<(Word, usize), String>> {
    let len = s.bytes().take_while(u8::is_ascii_lowercase).count();
    (len > 0).then(|| Ok((Word::parse(&s[..len]).expect("lowercase"), len)))
}

impl Syntax for Shuffle {
    fn lex_generator(&self, s: &str) -> Option<Result<(Word, usize), String>> {
        lex_word(s)
    }
}

impl Syntax for BrokenShuffle {
    fn lex_generator(&self, s: &str) -> Option<Result<(Word, usize), String>> {
        lex_word(s)
    }
}

impl Syntax for QuasiShuffle {
    fn lex_generator(&self, s: &str) -> Option<Result<(WeightedWord, usize), String>> {
        let mut pos = 0;
        let mut weights = Vec::new();
        loop {
            let rest = &s[pos..];
            if !rest.starts_with('(') {
                break;
            }
            let digits = leading_digits(&rest[1..]);
            if digits == 0 || rest.as_bytes().get(1 + digits) != Some(&b')') {
                break;
            }
            match rest[1..1 + digits].parse::<u32>() {
                Ok(w) => weights.push(w),
                Err(e) => return Some(Err(format!("bad weight: {e}"))),
            }
            pos += digits + 2;
        }
        if weights.is_empty() {
            return None;
        }
        Some(WeightedWord::new(weights).map(|w| (w, pos)).ok_or_else(|| "letter weights must be positive".to_string()))
    }
}

impl Syntax for ConnesKreimer {
    fn lex_generator(&self, s: &str) -> Option<Result<(Forest, usize), String>> {
        if !s.starts_with('T') {
            return None;
        }
        Some(Forest::parse_prefix(s).ok_or_else(|| "malformed tree literal".to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token<K> {
    Integer(BigInt),
    Slash,
    Plus,
    Minus,
    Star,
    LParen,
    RParen,
    Generator(K),
}

type Tokens<K> = Vec<(usize, Token<K>)>;

fn tokenize<S: Syntax>(src: &str, inst: &S) -> Result<Tokens<S::Key>, ParseError> {
    let mut out = Vec::new();
    let mut pos = 0;
    while pos < src.len() {
        let rest = &src[pos..];
        let c = rest.chars().next().expect("nonempty");
        if c.is_whitespace() {
            pos += c.len_utf8();
            continue;
        }
        if c.is_ascii_digit() {
            let n = leading_digits(rest);
            out.push((pos, Token::Integer(rest[..n].parse().expect("digits"))));
            pos += n;
            continue;
        }
        if let Some(lexed) = inst.lex_generator(rest) {
            let (key, used) = lexed.map_err(|m| syntax(pos, m))?;
            out.push((pos, Token::Generator(key)));
            pos += used;
            continue;
        }
        let simple = match c {
            '/' => Some(Token::Slash),
            '+' => Some(Token::Plus),
            '-' => Some(Token::Minus),
            '*' => Some(Token::Star),
            '(' => Some(Token::LParen),
            ')' => Some(Token::RParen),
            _ => None,
        };
        match simple {
            Some(t) => {
                out.push((pos, t));
                pos += 1;
            }
            None if c.is_alphanumeric() || c == '[' || c == ']' || c == '^' => {
                let text: String =
                    rest.chars().take_while(|ch| ch.is_alphanumeric() || matches!(ch, '[' | ']' | '^')).collect();
                return Err(ParseError::UnknownGenerator { position: pos, text });
            }
            None => return Err(syntax(pos, format!("unexpected character {c:?}"))),
        }
    }
    Ok(out)
}

/// Parsed expression, before evaluation in an instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr<K> {
    Rational(Scalar),
    Generator(K),
    /// Signed summands; `true` marks a subtracted term.
    Sum(Vec<(bool, Expr<K>)>),
    /// Factors with the source position of each `*` before factors 1.. .
    Product(Vec<Expr<K>>, Vec<usize>),
}

struct Parser<K> {
    tokens: Vec<(usize, Token<K>)>,
    next: usize,
    end: usize,
}

impl<K: Clone> Parser<K> {
    fn peek(&self) -> Option<&Token<K>> {
        self.tokens.get(self.next).map(|(_, t)| t)
    }

    fn position(&self) -> usize {
        self.tokens.get(self.next).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Token<K>> {
        let t = self.tokens.get(self.next).map(|(_, t)| t.clone());
        self.next += 1;
        t
    }

    fn expr(&mut self) -> Result<Expr<K>, ParseError> {
        let mut negated = false;
        match self.peek() {
            Some(Token::Minus) => {
                negated = true;
                self.bump();
            }
            Some(Token::Plus) => {
                self.bump();
            }
            _ => {}
        }
        let mut terms = vec![(negated, self.term()?)];
        loop {
            let sign = match self.peek() {
                Some(Token::Plus) => false,
                Some(Token::Minus) => true,
                _ => break,
            };
            self.bump();
            terms.push((sign, self.term()?));
        }
        Ok(if terms.len() == 1 && !terms[0].0 { terms.pop().expect("one term").1 } else { Expr::Sum(terms) })
    }

    fn term(&mut self) -> Result<Expr<K>, ParseError> {
        let mut factors = vec![self.factor()?];
        let mut stars = Vec::new();
        while let Some(Token::Star) = self.peek() {
            stars.push(self.position());
            self.bump();
            factors.push(self.factor()?);
        }
        Ok(if factors.len() == 1 { factors.pop().expect("one factor") } else { Expr::Product(factors, stars) })
    }

    fn factor(&mut self) -> Result<Expr<K>, ParseError> {
        let pos = self.position();
        match self.bump() {
            Some(Token::Integer(n)) => {
                if let Some(Token::Slash) = self.peek() {
                    self.bump();
                    let dpos = self.position();
                    match self.bump() {
                        Some(Token::Integer(d)) if d.is_zero() => Err(syntax(dpos, "zero denominator")),
                        Some(Token::Integer(d)) => Ok(Expr::Rational(BigRational::new(n, d))),
                        _ => Err(syntax(dpos, "expected a denominator after '/'")),
                    }
                } else {
                    Ok(Expr::Rational(BigRational::from_integer(n)))
                }
            }
            Some(Token::Generator(k)) => Ok(Expr::Generator(k)),
            Some(Token::LParen) => {
                let inner = self.expr()?;
                let close = self.position();
                match self.bump() {
                    Some(Token::RParen) => Ok(inner),
                    _ => Err(syntax(close, "expected ')'")),
                }
            }
            Some(_) => Err(syntax(pos, "expected a number, generator, or '('")),
            None => Err(syntax(pos, "unexpected end of input")),
        }
    }
}

pub fn parse_ast<S: Syntax>(src: &str, inst: &S) -> Result<Expr<S::Key>, ParseError> {
    let tokens = tokenize(src, inst)?;
    let mut p = Parser { tokens, next: 0, end: src.len() };
    let e = p.expr()?;
    if p.next < p.tokens.len() {
        return Err(syntax(p.position(), "unexpected trailing input"));
    }
    Ok(e)
}

enum Value<K: crate::freemod::BasisKey> {
    Scalar(Scalar),
    Element(Element<K>),
}

type ProductFn<'a, K> = &'a dyn Fn(&Element<K>, &Element<K>) -> Element<K>;

fn evaluate<C: Coalgebra>(
    e: &Expr<C::Key>,
    inst: &C,
    product: Option<ProductFn<'_, C::Key>>,
) -> Result<Value<C::Key>, ParseError> {
    Ok(match e {
        Expr::Rational(q) => Value::Scalar(q.clone()),
        Expr::Generator(k) => Value::Element(Element::basis(k.clone())),
        Expr::Sum(terms) => {
            let mut acc = Element::zero();
            for (negated, t) in terms {
                let v = into_element(evaluate(t, inst, product)?, inst);
                acc = if *negated { acc.sub(&v) } else { acc.add(&v) };
            }
            Value::Element(acc)
        }
        Expr::Product(factors, stars) => {
            let mut acc = evaluate(&factors[0], inst, product)?;
            for (f, &star) in factors[1..].iter().zip(stars) {
                let rhs = evaluate(f, inst, product)?;
                acc = match (acc, rhs) {
                    (Value::Scalar(a), Value::Scalar(b)) => Value::Scalar(a * b),
                    (Value::Scalar(a), Value::Element(b)) | (Value::Element(b), Value::Scalar(a)) => {
                        Value::Element(b.scale(&a))
                    }
                    (Value::Element(a), Value::Element(b)) => match product {
                        Some(m) => Value::Element(m(&a, &b)),
                        None => return Err(ParseError::ProductNotAllowed { position: star }),
                    },
                };
            }
            acc
        }
    })
}

fn into_element<C: Coalgebra>(v: Value<C::Key>, inst: &C) -> Element<C::Key> {
    match v {
        Value::Scalar(q) => inst.unit().scale(&q),
        Value::Element(e) => e,
    }
}

/// Parses and evaluates `src` in a bialgebra; `*` between elements is the
/// instance product.
pub fn parse_expression<H: Bialgebra + Syntax>(src: &str, inst: &H) -> Result<Element<H::Key>, ParseError> {
    let ast = parse_ast(src, inst)?;
    let m = |a: &Element<H::Key>, b: &Element<H::Key>| inst.multiply(a, b);
    Ok(into_element(evaluate(&ast, inst, Some(&m))?, inst))
}

/// Parses `src` using only the coalgebra structure; a product of two
/// non-scalar factors is rejected.
pub fn parse_coalgebra_expression<C: Syntax>(src: &str, inst: &C) -> Result<Element<C::Key>, ParseError> {
    let ast = parse_ast(src, inst)?;
    Ok(into_element(evaluate(&ast, inst, None)?, inst))
}
