//! Edge lists with 1-indexed labels: `{(1,2),(1,3)}`, optionally prefixed by
//! the order as `5;` so that isolated vertices survive.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

pub fn emit(g: &Graph) -> String {
    let mut s = String::new();
    if (0..g.order()).any(|v| g.degree(v) == 0) {
        s.push_str(&format!("{};", g.order()));
    }
    s.push('{');
    for (i, e) in g.edges().iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        s.push_str(&format!("({},{})", e.u() + 1, e.v() + 1));
    }
    s.push('}');
    s
}

struct Cursor<'a> {
    b: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.b.len() && self.b[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.b.get(self.pos).copied()
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected '{}'", c as char)))
        }
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.b.len() && self.b[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        let text = std::str::from_utf8(&self.b[start..self.pos]).expect("digits");
        text.parse().map_err(|_| Error::Parse {
            pos: start,
            msg: "number too large".into(),
        })
    }
}

pub fn parse(s: &str) -> Result<Graph> {
    let mut c = Cursor {
        b: s.as_bytes(),
        pos: 0,
    };
    let mut declared = None;
    if c.peek().is_some_and(|b| b.is_ascii_digit()) {
        declared = Some(c.number()?);
        c.expect(b';')?;
    }
    c.expect(b'{')?;
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();
    if c.peek() != Some(b'}') {
        loop {
            let at = c.pos;
            c.expect(b'(')?;
            let a_pos = {
                c.skip_ws();
                c.pos
            };
            let a = c.number()?;
            c.expect(b',')?;
            let b_pos = {
                c.skip_ws();
                c.pos
            };
            let b = c.number()?;
            c.expect(b')')?;
            for (label, p) in [(a, a_pos), (b, b_pos)] {
                if label == 0 {
                    return Err(Error::Parse {
                        pos: p,
                        msg: "labels start at 1".into(),
                    });
                }
            }
            if a == b {
                return Err(Error::Parse {
                    pos: at,
                    msg: format!("loop at vertex {a}"),
                });
            }
            edges.push((a.min(b) - 1, a.max(b) - 1, at));
            match c.peek() {
                Some(b',') => c.pos += 1,
                Some(b'}') => break,
                _ => return Err(c.err("expected ',' or '}'")),
            }
        }
    }
    c.expect(b'}')?;
    if c.peek().is_some() {
        return Err(c.err("trailing input"));
    }
    let max_label = edges.iter().map(|&(_, v, _)| v + 1).max().unwrap_or(0);
    let n = match declared {
        Some(n) if n < max_label => {
            return Err(Error::Parse {
                pos: 0,
                msg: format!("declared order {n} is below label {max_label}"),
            })
        }
        Some(n) => n,
        None => max_label,
    };
    if n > MAX_ORDER {
        return Err(Error::Parse {
            pos: 0,
            msg: format!("order {n} exceeds {MAX_ORDER}"),
        });
    }
    let mut g = Graph::empty(n)?;
    for (u, v, at) in edges {
        if g.has_edge(u, v) {
            return Err(Error::Parse {
                pos: at,
                msg: format!("duplicate edge ({},{})", u + 1, v + 1),
            });
        }
        g.link(u, v);
    }
    Ok(g)
}
