use super::{CwError, ExprBuilder, KExpression, Label};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tok {
    Intro,
    Eta,
    Rho,
    Open,
    Close,
    Plus,
    Comma,
    Int(u64),
    End,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Lexer<'_> {
    /// Next token and its byte offset.
    fn next(&mut self) -> Result<(Tok, usize), CwError> {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        let start = self.pos;
        let Some(&c) = self.src.get(self.pos) else {
            return Ok((Tok::End, start));
        };
        let single = match c {
            b'(' => Some(Tok::Open),
            b')' => Some(Tok::Close),
            b'+' => Some(Tok::Plus),
            b',' => Some(Tok::Comma),
            _ => None,
        };
        if let Some(t) = single {
            self.pos += 1;
            return Ok((t, start));
        }
        if c.is_ascii_digit() {
            let mut v: u64 = 0;
            while let Some(&d) = self.src.get(self.pos).filter(|d| d.is_ascii_digit()) {
                v = v
                    .checked_mul(10)
                    .and_then(|v| v.checked_add(u64::from(d - b'0')))
                    .ok_or_else(|| syntax(start, "integer too large"))?;
                self.pos += 1;
            }
            return Ok((Tok::Int(v), start));
        }
        if c.is_ascii_alphabetic() {
            while self.src.get(self.pos).is_some_and(|d| d.is_ascii_alphanumeric()) {
                self.pos += 1;
            }
            return match &self.src[start..self.pos] {
                b"v" => Ok((Tok::Intro, start)),
                b"eta" => Ok((Tok::Eta, start)),
                b"rho" => Ok((Tok::Rho, start)),
                _ => Err(syntax(start, "unknown identifier")),
            };
        }
        Err(syntax(start, "unexpected character"))
    }
}

fn syntax(pos: usize, message: &str) -> CwError {
    CwError::Syntax { pos, message: message.to_string() }
}

enum Frame {
    /// Inside `(`, before the left operand is complete.
    UnionLeft,
    /// Left operand done, right operand pending.
    UnionRight(usize),
    /// `eta(i,j,` or `rho(i,j,` awaiting the operand.
    Unary { join: bool, i: Label, j: Label },
}

/// Parses the text form of a k-expression.
///
/// ```
/// use polykern::cwexpr::{eval_kexpr, parse_kexpr};
/// let e = parse_kexpr("eta(1, 2, (v(1) + v(2)))").unwrap();
/// assert_eq!(e.to_text(), "eta(1,2,(v(1)+v(2)))");
/// assert_eq!(eval_kexpr(&e).graph.m(), 1);
/// assert!(parse_kexpr("eta(1,1,v(1))").is_err());
/// ```
pub fn parse_kexpr(text: &str) -> Result<KExpression, CwError> {
    let mut lx = Lexer { src: text.as_bytes(), pos: 0 };
    let mut b = ExprBuilder::new();
    let mut frames: Vec<Frame> = Vec::new();
    let expect = |lx: &mut Lexer<'_>, want: Tok, what: &str| -> Result<(), CwError> {
        let (t, p) = lx.next()?;
        if t == want {
            Ok(())
        } else {
            Err(syntax(p, &format!("expected {what}")))
        }
    };
    let label = |lx: &mut Lexer<'_>| -> Result<Label, CwError> {
        match lx.next()? {
            (Tok::Int(0), p) => Err(CwError::ZeroLabel { pos: p }),
            (Tok::Int(v), p) => Label::try_from(v).map_err(|_| syntax(p, "label too large")),
            (_, p) => Err(syntax(p, "expected label")),
        }
    };
    loop {
        // Descend until an operand is complete.
        let (tok, pos) = lx.next()?;
        let mut done = match tok {
            Tok::Intro => {
                expect(&mut lx, Tok::Open, "'('")?;
                let l = label(&mut lx)?;
                expect(&mut lx, Tok::Close, "')'")?;
                b.intro(l)
            }
            Tok::Open => {
                frames.push(Frame::UnionLeft);
                continue;
            }
            Tok::Eta | Tok::Rho => {
                let join = tok == Tok::Eta;
                expect(&mut lx, Tok::Open, "'('")?;
                let i = label(&mut lx)?;
                expect(&mut lx, Tok::Comma, "','")?;
                let j = label(&mut lx)?;
                expect(&mut lx, Tok::Comma, "','")?;
                if i == j {
                    return Err(CwError::EqualLabels { op: if join { "eta" } else { "rho" }, pos });
                }
                frames.push(Frame::Unary { join, i, j });
                continue;
            }
            _ => return Err(syntax(pos, "expected expression")),
        };
        // Ascend through frames that the completed operand closes.
        loop {
            match frames.pop() {
                None => {
                    let (t, p) = lx.next()?;
                    if t != Tok::End {
                        return Err(syntax(p, "trailing input"));
                    }
                    return b.finish(done);
                }
                Some(Frame::UnionLeft) => {
                    expect(&mut lx, Tok::Plus, "'+'")?;
                    frames.push(Frame::UnionRight(done));
                    break;
                }
                Some(Frame::UnionRight(left)) => {
                    expect(&mut lx, Tok::Close, "')'")?;
                    done = b.union(left, done);
                }
                Some(Frame::Unary { join, i, j }) => {
                    expect(&mut lx, Tok::Close, "')'")?;
                    done = if join { b.join(i, j, done) } else { b.rename(i, j, done) };
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn errors_carry_positions() {
        assert_eq!(parse_kexpr("eta(1,1,v(1))"), Err(CwError::EqualLabels { op: "eta", pos: 0 }));
        assert_eq!(parse_kexpr("  rho(2,2,v(1))"), Err(CwError::EqualLabels { op: "rho", pos: 2 }));
        assert_eq!(parse_kexpr("v(0)"), Err(CwError::ZeroLabel { pos: 2 }));
        assert!(matches!(parse_kexpr("(v(1)+v(2)"), Err(CwError::Syntax { pos: 10, .. })));
        assert!(matches!(parse_kexpr("(v(1) v(2))"), Err(CwError::Syntax { pos: 6, .. })));
        assert!(matches!(parse_kexpr("v(1) v(2)"), Err(CwError::Syntax { pos: 5, .. })));
        assert!(matches!(parse_kexpr("w(1)"), Err(CwError::Syntax { pos: 0, .. })));
        assert!(matches!(parse_kexpr(""), Err(CwError::Syntax { pos: 0, .. })));
    }

    #[test]
    fn deep_nesting_does_not_recurse() {
        let depth = 200_000;
        let mut s = String::new();
        for _ in 0..depth {
            s.push_str("(v(1)+");
        }
        s.push_str("v(1)");
        for _ in 0..depth {
            s.push(')');
        }
        let e = parse_kexpr(&s).unwrap();
        assert_eq!(e.order(), depth + 1);
        assert_eq!(e.to_text(), s);
    }
}
