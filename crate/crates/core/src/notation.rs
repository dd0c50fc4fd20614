//! Text notation for chains.
//!
//! ```text
//! (2,1,1,3,2,1)!&     open chain by run lengths, optional leading operator
//! ()                  the two-node chain
//! [3,1,1,3,2,2]!|     closed chain by run lengths
//! &&|&|||&&|          open chain by interior operators
//! @&&&|&|||&&||       closed chain by the operators of nodes 1..n
//! (inf)!&             uniform infinite chain
//! (inf,1,2,inf)       finite runs between two infinite ones
//! (inf,1,2,...)       infinitely many runs to the right (the "..." is optional)
//! (...,3,1,inf)       infinitely many runs to the left (the "..." is optional)
//! (...)               runs unbounded in both directions
//! ```
//!
//! Whitespace is ignored. `∧`/`∨` are accepted for `&`/`|`, `∞` for `inf`
//! and `…` for `...`.

use crate::error::ParseError;
use crate::model::{open_from_operators, Chain, ClosedChain, InfiniteChain, OpenChain, Operator};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tok {
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Int(u64),
    Inf,
    Ellipsis,
    Op(Operator),
    At,
    Bang,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let syntax = |pos: usize, msg: String| ParseError::Syntax { pos, msg };
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            ',' => Tok::Comma,
            '&' | '∧' => Tok::Op(Operator::And),
            '|' | '∨' => Tok::Op(Operator::Or),
            '@' => Tok::At,
            '!' => Tok::Bang,
            '∞' => Tok::Inf,
            '…' => Tok::Ellipsis,
            '.' => {
                if chars.get(i..i + 3) == Some(&['.', '.', '.']) {
                    i += 2;
                    Tok::Ellipsis
                } else {
                    return Err(syntax(i, "expected '...'".into()));
                }
            }
            'i' => {
                if chars.get(i..i + 3) == Some(&['i', 'n', 'f']) {
                    i += 2;
                    Tok::Inf
                } else {
                    return Err(syntax(i, "expected 'inf'".into()));
                }
            }
            d if d.is_ascii_digit() => {
                let mut end = i;
                while end < chars.len() && chars[end].is_ascii_digit() {
                    end += 1;
                }
                let digits: String = chars[i..end].iter().collect();
                let value = digits
                    .parse::<u64>()
                    .map_err(|_| syntax(start, format!("integer {digits} is too large")))?;
                i = end - 1;
                Tok::Int(value)
            }
            other => return Err(syntax(i, format!("unexpected character {other:?}"))),
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<Tok> {
        self.toks.get(self.pos).map(|&(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |&(p, _)| p)
    }

    fn error<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            pos: self.offset(),
            msg: msg.into(),
        })
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.peek();
        self.pos += 1;
        t
    }

    fn expect_end(&self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(_) => self.error("unexpected trailing input"),
        }
    }

    fn ops(&mut self) -> Result<Vec<Operator>, ParseError> {
        let mut ops = Vec::new();
        while let Some(Tok::Op(op)) = self.peek() {
            ops.push(op);
            self.pos += 1;
        }
        if ops.is_empty() {
            return self.error("expected '&' or '|'");
        }
        Ok(ops)
    }

    /// Optional `!&` / `!|` suffix.
    fn leading_op(&mut self) -> Result<Option<Operator>, ParseError> {
        if self.peek() != Some(Tok::Bang) {
            return Ok(None);
        }
        self.pos += 1;
        match self.next() {
            Some(Tok::Op(op)) => Ok(Some(op)),
            _ => {
                self.pos -= 1;
                self.error("expected '&' or '|' after '!'")
            }
        }
    }

    fn ints_until(&mut self, close: Tok) -> Result<Vec<u64>, ParseError> {
        let mut v = Vec::new();
        if self.peek() == Some(close) {
            self.pos += 1;
            return Ok(v);
        }
        loop {
            match self.next() {
                Some(Tok::Int(k)) => v.push(k),
                _ => {
                    self.pos -= 1;
                    return self.error("expected an integer");
                }
            }
            match self.next() {
                Some(Tok::Comma) => continue,
                Some(t) if t == close => return Ok(v),
                _ => {
                    self.pos -= 1;
                    return self.error("expected ',' or a closing bracket");
                }
            }
        }
    }

    fn paren_items(&mut self) -> Result<Vec<(usize, Tok)>, ParseError> {
        let mut items = Vec::new();
        if self.peek() == Some(Tok::RParen) {
            self.pos += 1;
            return Ok(items);
        }
        loop {
            let at = self.offset();
            match self.next() {
                Some(t @ (Tok::Int(_) | Tok::Inf | Tok::Ellipsis)) => items.push((at, t)),
                _ => {
                    self.pos -= 1;
                    return self.error("expected an integer, 'inf' or '...'");
                }
            }
            match self.next() {
                Some(Tok::Comma) => continue,
                Some(Tok::RParen) => return Ok(items),
                _ => {
                    self.pos -= 1;
                    return self.error("expected ',' or ')'");
                }
            }
        }
    }
}

/// Parses one chain spec.
pub fn parse_spec(text: &str) -> Result<Chain, ParseError> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.chars().count(),
    };
    let chain = match p.peek() {
        None => return p.error("empty spec"),
        Some(Tok::Op(_)) => {
            let ops = p.ops()?;
            Chain::Open(open_from_operators(&ops))
        }
        Some(Tok::At) => {
            p.pos += 1;
            let ops = p.ops()?;
            Chain::Closed(ClosedChain::from_operators(&ops)?)
        }
        Some(Tok::LBracket) => {
            p.pos += 1;
            let runs = p.ints_until(Tok::RBracket)?;
            let op = p.leading_op()?.unwrap_or_default();
            Chain::Closed(ClosedChain::new(runs, op)?)
        }
        Some(Tok::LParen) => {
            p.pos += 1;
            let items = p.paren_items()?;
            let op = p.leading_op()?;
            paren_chain(&items, op, p.end)?
        }
        Some(_) => return p.error("expected '(', '[', '@' or an operator"),
    };
    p.expect_end()?;
    Ok(chain)
}

fn paren_chain(
    items: &[(usize, Tok)],
    op: Option<Operator>,
    end: usize,
) -> Result<Chain, ParseError> {
    let is = |i: usize, t: Tok| items.get(i).map(|&(_, x)| x) == Some(t);
    let last = items.len().saturating_sub(1);

    if items.iter().all(|&(_, t)| matches!(t, Tok::Int(_))) {
        let runs = items
            .iter()
            .map(|&(_, t)| if let Tok::Int(k) = t { k } else { 0 })
            .collect();
        return Ok(Chain::Open(OpenChain::new(runs, op.unwrap_or_default())?));
    }
    if items.len() == 1 && is(0, Tok::Ellipsis) {
        return Ok(Chain::Infinite(InfiniteChain::BiInfinitePattern));
    }
    if items.len() == 1 && is(0, Tok::Inf) {
        return Ok(Chain::Infinite(InfiniteChain::Uniform(op.unwrap_or_default())));
    }

    let lead_ellipsis = is(0, Tok::Ellipsis);
    let trail_ellipsis = is(last, Tok::Ellipsis);
    let lo = usize::from(lead_ellipsis);
    let hi = items.len() - usize::from(trail_ellipsis);
    let body = &items[lo..hi];
    let lone_inf = body.len() == 1 && body[0].1 == Tok::Inf;
    // "(...,inf)" puts its only inf at the right end
    let inf_first = body.first().map(|&(_, t)| t) == Some(Tok::Inf) && !(lone_inf && lead_ellipsis);
    let inf_last = if lone_inf {
        !inf_first
    } else {
        body.len() > 1 && body.last().map(|&(_, t)| t) == Some(Tok::Inf)
    };
    let inner = &body[usize::from(inf_first)..body.len() - usize::from(inf_last)];

    let mut runs = Vec::with_capacity(inner.len());
    for &(pos, t) in inner {
        match t {
            Tok::Int(0) => {
                return Err(crate::error::ModelError::ZeroRun { index: runs.len() }.into())
            }
            Tok::Int(k) => runs.push(k),
            Tok::Inf => return Err(ParseError::InteriorInfinity { pos }),
            _ => {
                return Err(ParseError::Syntax {
                    pos,
                    msg: "'...' may only appear at either end".into(),
                })
            }
        }
    }

    let bad = |msg: &str| {
        Err(ParseError::Syntax {
            pos: end,
            msg: msg.into(),
        })
    };
    let chain = match (lead_ellipsis, inf_first, inf_last, trail_ellipsis) {
        (false, true, true, false) => InfiniteChain::BoundedMiddle(runs),
        (false, true, false, _) => InfiniteChain::RightInfinite(runs),
        (_, false, true, false) => InfiniteChain::LeftInfinite(runs),
        (true, true, _, _) | (_, _, true, true) => {
            return bad("'...' cannot sit outside an 'inf' run")
        }
        _ => return bad("'...' needs 'inf' at the opposite end"),
    };
    Ok(Chain::Infinite(chain))
}

fn join(runs: &[u64]) -> String {
    runs.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

/// Canonical text for a chain; `parse_spec` reads it back to the same value
/// (closed chains come back with rotation origin 0).
pub fn format_spec(chain: &Chain) -> String {
    match chain {
        Chain::Open(c) => format!("({})!{}", join(c.runs()), c.leading_op()),
        Chain::Closed(c) => format!("[{}]!{}", join(c.runs()), c.leading_op()),
        Chain::Infinite(inf) => match inf {
            InfiniteChain::Uniform(op) => format!("(inf)!{op}"),
            InfiniteChain::BoundedMiddle(r) if r.is_empty() => "(inf,inf)".into(),
            InfiniteChain::BoundedMiddle(r) => format!("(inf,{},inf)", join(r)),
            InfiniteChain::LeftInfinite(r) if r.is_empty() => "(...,inf)".into(),
            InfiniteChain::LeftInfinite(r) => format!("(...,{},inf)", join(r)),
            InfiniteChain::RightInfinite(r) if r.is_empty() => "(inf,...)".into(),
            InfiniteChain::RightInfinite(r) => format!("(inf,{},...)", join(r)),
            InfiniteChain::BiInfinitePattern => "(...)".into(),
        },
    }
}
