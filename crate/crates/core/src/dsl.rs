//! Named-graph expressions:
//!
//! ```text
//! expr := P<n> | C<n> | K<n> | K<m>,<n> | KmM<n> | C4plus | fig1
//!       | cone(expr) | union(expr,expr) | glue(expr,expr)
//! ```
//!
//! `KmM<n>` is `K_{n,n}` minus a perfect matching and `glue` identifies the
//! highest-numbered universal vertex of each operand. Names are case-sensitive.

use crate::error::{GraphError, ParseError};
use crate::families;
use crate::graph::Graph;

pub fn parse(text: &str) -> Result<Graph, ParseError> {
    let mut p = Parser { text, pos: 0 };
    let g = p.expr()?;
    p.skip_ws();
    if p.pos != text.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(g)
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn rest(&self) -> &str {
        &self.text[self.pos..]
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn lift(&self, start: usize, e: GraphError) -> ParseError {
        ParseError {
            offset: start,
            message: e.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<(), ParseError> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{token}`")))
        }
    }

    fn number(&mut self) -> Result<usize, ParseError> {
        let digits = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.error("expected a number"));
        }
        let n = self.rest()[..digits]
            .parse()
            .map_err(|_| self.error("number too large"))?;
        self.pos += digits;
        Ok(n)
    }

    fn pair(&mut self) -> Result<(Graph, Graph), ParseError> {
        self.expect("(")?;
        let a = self.expr()?;
        self.expect(",")?;
        let b = self.expr()?;
        self.expect(")")?;
        Ok((a, b))
    }

    fn expr(&mut self) -> Result<Graph, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if self.eat("cone") {
            self.expect("(")?;
            let g = self.expr()?;
            self.expect(")")?;
            return families::cone(&g).map_err(|e| self.lift(start, e));
        }
        if self.eat("union") {
            let (a, b) = self.pair()?;
            return families::disjoint_union(&a, &b).map_err(|e| self.lift(start, e));
        }
        if self.eat("glue") {
            let (a, b) = self.pair()?;
            let last_universal = |g: &Graph| families::universal_vertices(g).last().copied();
            let (Some(u), Some(v)) = (last_universal(&a), last_universal(&b)) else {
                return Err(ParseError {
                    offset: start,
                    message: "glue operands need a universal vertex".into(),
                });
            };
            return families::identify_universal_pair(&a, u, &b, v)
                .map_err(|e| self.lift(start, e));
        }
        if self.eat("C4plus") {
            return Ok(families::c4_plus());
        }
        if self.eat("fig1") {
            return Ok(families::fig1_graph());
        }
        if self.eat("KmM") {
            let n = self.number()?;
            return families::complete_bipartite_minus_matching(n).map_err(|e| self.lift(start, e));
        }
        let built = if self.eat("P") {
            families::path(self.number()?)
        } else if self.eat("C") {
            families::cycle(self.number()?)
        } else if self.eat("K") {
            let m = self.number()?;
            let bipartite = self.rest().starts_with(',')
                && self.rest()[1..].starts_with(|c: char| c.is_ascii_digit());
            if bipartite {
                self.pos += 1;
                let n = self.number()?;
                families::complete_bipartite(m, n)
            } else {
                families::complete(m)
            }
        } else {
            return Err(self.error("expected a graph name"));
        };
        built.map_err(|e| self.lift(start, e))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::families::*;

    #[test]
    fn names() {
        assert_eq!(parse("P4").unwrap(), path(4).unwrap());
        assert_eq!(parse("C5").unwrap(), cycle(5).unwrap());
        assert_eq!(parse("K3").unwrap(), complete(3).unwrap());
        assert_eq!(parse("K2,3").unwrap(), complete_bipartite(2, 3).unwrap());
        assert_eq!(
            parse("KmM4").unwrap(),
            complete_bipartite_minus_matching(4).unwrap()
        );
        assert_eq!(parse("C4plus").unwrap(), c4_plus());
        assert_eq!(parse("fig1").unwrap(), fig1_graph());
    }

    #[test]
    fn compositions() {
        let g = parse("union(C6,P6)").unwrap();
        assert_eq!((g.order(), g.size()), (12, 11));
        assert_eq!(parse(" union( K3 , K2,2 ) ").unwrap().order(), 7);
        assert_eq!(parse("union(K3,P2)").unwrap().order(), 5);
        let wheel = parse("cone(C4)").unwrap();
        assert_eq!(wheel.max_degree(), 4);
        let glued = parse("glue(cone(KmM4),cone(KmM6))").unwrap();
        assert_eq!(glued, glued_matching_cones(2).unwrap());
        assert!(is_isomorphic(
            &parse("glue(cone(P1),cone(P1))").unwrap(),
            &path(3).unwrap()
        ));
    }

    #[test]
    fn errors() {
        assert!(parse("").is_err());
        assert!(parse("p4").is_err());
        assert!(parse("C2").is_err());
        assert!(parse("P40").is_err());
        assert!(parse("union(P2)").is_err());
        assert!(parse("cone(P3").is_err());
        assert!(parse("P3 P3").is_err());
        assert!(parse("glue(P4,cone(P2))").is_err());
        assert!(parse("P99999999999999999999999").is_err());
        assert_eq!(parse("union(K3,Q)").unwrap_err().offset, 9);
    }
}
