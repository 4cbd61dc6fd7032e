//! The fixed list of identities, each stored as a canonical DSL string.

use std::sync::OnceLock;

use crate::dsl::{parse_identity_with, IdentityExpr};

/// Which values of `n` an identity is stated for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    From(i64),
    /// `n >= start` with `n % modulus == residue`.
    Residue {
        start: i64,
        modulus: i64,
        residue: i64,
    },
}

impl Domain {
    pub fn contains(&self, n: i64) -> bool {
        match *self {
            Domain::From(n0) => n >= n0,
            Domain::Residue { start, modulus, residue } => n >= start && n.rem_euclid(modulus) == residue,
        }
    }

    pub fn start(&self) -> i64 {
        match *self {
            Domain::From(n0) => n0,
            Domain::Residue { start, .. } => start,
        }
    }
}

impl std::fmt::Display for Domain {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            Domain::From(n0) => write!(f, "n >= {n0}"),
            Domain::Residue { start, modulus, residue } => write!(f, "n >= {start}, n = {residue} mod {modulus}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Group {
    Relation,
    Polynomial,
    KnownValue,
    Number,
    Audit,
}

#[derive(Debug, Clone)]
pub struct Identity {
    pub id: &'static str,
    pub paper_eq: &'static str,
    pub group: Group,
    pub domain: Domain,
    /// Sampled parameter name, if the identity has one.
    pub param: Option<&'static str>,
    /// Largest multiple of `n` appearing as an index (`4` for the `4n + r` families).
    pub index_scale: u32,
    pub canonical: &'static str,
    pub expr: IdentityExpr,
}

impl Identity {
    pub fn param_a(&self) -> bool {
        self.param == Some("a")
    }

    pub fn is_audit(&self) -> bool {
        self.group == Group::Audit
    }

    /// Largest `n` tested in a sweep up to `n_max`.
    ///
    /// Families indexed by `4n + r` stop where their top index matches the
    /// `2n + 1` families at `n_max`.
    pub fn n_limit(&self, n_max: i64) -> i64 {
        n_max * 2 / i64::from(self.index_scale.max(2))
    }

    pub fn admissible(&self, n_max: i64) -> Vec<i64> {
        (self.domain.start()..=self.n_limit(n_max)).filter(|&n| self.domain.contains(n)).collect()
    }
}

struct Entry {
    id: &'static str,
    label: &'static str,
    group: Group,
    domain: Domain,
    param: Option<&'static str>,
    scale: u32,
    text: &'static str,
}

const fn entry(id: &'static str, label: &'static str, group: Group, n0: i64, scale: u32, text: &'static str) -> Entry {
    Entry { id, label, group, domain: Domain::From(n0), param: None, scale, text }
}

const fn sampled(id: &'static str, label: &'static str, param: &'static str, text: &'static str) -> Entry {
    Entry { id, label, group: Group::Relation, domain: Domain::From(0), param: Some(param), scale: 1, text }
}

use Group::*;

const ENTRIES: &[Entry] = &[
    entry("EQ1.2", "E_n(2z) as a difference of B_{n+1} at z+1/2 and z", Relation, 0, 1,
        "(n+1)/2^(n+1)*E(n,2*z) == B(n+1,z+1/2)-B(n+1,z)"),
    entry("EQ1.3", "E_{n-1}(z) via B_n(z) and B_n(z/2)", Relation, 1, 1,
        "n/2*E(n-1,z) == B(n,z)-2^n*B(n,z/2)"),
    sampled("EQ1.4B", "addition formula for B_n(x+y)", "y",
        "B(n,z+y) == sum(k=0..n,binom(n,k)*B(k,z)*y^(n-k))"),
    sampled("EQ1.4E", "addition formula for E_n(x+y)", "y",
        "E(n,z+y) == sum(k=0..n,binom(n,k)*E(k,z)*y^(n-k))"),
    entry("EQ1.5m2", "multiplication formula, m = 2", Relation, 0, 1,
        "B(n,2*z) == 2^(n-1)*sum(k=0..1,B(n,z+k/2))"),
    entry("EQ1.5m3", "multiplication formula, m = 3", Relation, 0, 1,
        "B(n,3*z) == 3^(n-1)*sum(k=0..2,B(n,z+k/3))"),
    entry("T2.1a", "even-index B sum equals 2^n B_n(2z-1/2)", Polynomial, 0, 1,
        "sum(k=0..floor(n,2), binom(n,2*k) * 4^(n-2*k) * B(n-2*k, z)) == 2^n * B(n, 2*z - 1/2)"),
    entry("T2.1b", "alternating B_j(2z) sum equals 2^n B_n(2z-1/2)", Polynomial, 0, 1,
        "sum(j=0..n,(-1)^(n-j)*2^j*binom(n,j)*B(j,2*z)) == 2^n*B(n,2*z-1/2)"),
    entry("T2.2a", "even-index B sum over 2k+1 equals 2^n E_n(2z-1/2)", Polynomial, 0, 1,
        "sum(k=0..floor(n,2),4^(n-2*k)/(2*k+1)*binom(n,2*k)*B(n-2*k,z)) == 2^n*E(n,2*z-1/2)"),
    entry("T2.2b", "alternating E_j(2z) sum equals 2^n E_n(2z-1/2)", Polynomial, 0, 1,
        "sum(j=0..n,(-1)^(n-j)*2^j*binom(n,j)*E(j,2*z)) == 2^n*E(n,2*z-1/2)"),
    entry("T2.3a", "2^n B_n(z+1/4) as a B_k(z) sum", Polynomial, 0, 1,
        "2^n*B(n,z+1/4) == sum(k=0..n,2^(2*k-n)*binom(n,k)*B(k,z))"),
    entry("T2.3b", "B_k(z) sum against E_{n-k}(1/2) B_k(2z) sum", Polynomial, 0, 1,
        "sum(k=0..n,2^(2*k-n)*binom(n,k)*B(k,z)) == sum(k=0..n,binom(n,k)*E(n-k,1/2)*B(k,2*z))"),
    entry("T2.3c", "E_{n-k}(1/2) B_k(2z) sum against B_{n-k}(1/2) E_k(2z) sum", Polynomial, 0, 1,
        "sum(k=0..n,binom(n,k)*E(n-k,1/2)*B(k,2*z)) == sum(k=0..n,binom(n,k)*B(n-k,1/2)*E(k,2*z))"),
    entry("T2.4a", "B_n(z) plus even-index tail equals B_n(3z-1)/3^n", Polynomial, 0, 1,
        "B(n,z)+2*sum(k=1..floor(n,2),binom(n,2*k)*B(n-2*k,z)/3^(2*k+1)) == 1/3^n*B(n,3*z-1)"),
    entry("T2.4b", "alternating B_k(3z) sum equals B_n(3z-1)", Polynomial, 0, 1,
        "1/3^n*sum(k=0..n,(-1)^(n-k)*binom(n,k)*B(k,3*z)) == 1/3^n*B(n,3*z-1)"),
    Entry {
        id: "T2.5a",
        label: "a^n-weighted B sum equals the mean of E_n(az) and E_n(az+1)",
        group: Polynomial,
        domain: Domain::From(0),
        param: Some("a"),
        scale: 1,
        text: "a^n*sum(k=0..n,binom(n,k)*B(n-k,z)/(k+1)) == 1/2*(E(n,a*z)+E(n,a*z+1))",
    },
    Entry {
        id: "T2.5b",
        label: "E_{n-k}(az) sum equals the mean of E_n(az) and E_n(az+1)",
        group: Polynomial,
        domain: Domain::From(0),
        param: Some("a"),
        scale: 1,
        text: "E(n,a*z)+1/2*sum(k=1..n,binom(n,k)*E(n-k,a*z)) == 1/2*(E(n,a*z)+E(n,a*z+1))",
    },
    entry("T2.6", "fourth-index B sum against Gaussian-weighted B_{n-k}(2z) sum", Polynomial, 0, 1,
        "sum(k=0..floor(n,4),(-1)^k*binom(n,4*k)*B(n-4*k,z)/2^(6*k)) == \
         1/2^(n+1)*sum(k=0..n,(-1)^k*(1+i^k)/(1+i)^k*binom(n,k)*B(n-k,2*z))"),
    entry("T3.1a", "odd-index B_{2k-1}(z) sum against k E_{2k-1}(z) sum", Polynomial, 0, 2,
        "sum(k=1..n,2^(2*k-1)*binom(2*n,2*k-1)*B(2*k-1,z)) == sum(k=1..n,k*2^(2*k)*binom(2*n,2*k)*E(2*k-1,z))"),
    entry("T3.1b", "even-index B_{2k}(z) sum against (2k+1) E_{2k}(z) sum", Polynomial, 0, 2,
        "sum(k=0..n,2^(2*k)*binom(2*n+1,2*k)*B(2*k,z)) == \
         sum(k=0..n,(2*k+1)*2^(2*k)*binom(2*n+1,2*k+1)*E(2*k,z))"),
    entry("T3.2a", "B_{2k}(z) sum over 2(n-k)+1 against E(2z) sums, index 2n", Polynomial, 0, 2,
        "sum(k=0..n,4^(2*k)/(2*(n-k)+1)*binom(2*n,2*k)*B(2*k,z)) == \
         sum(k=0..n,2^(2*k)*binom(2*n,2*k)*E(2*k,2*z))-sum(k=0..n-1,2^(2*k+1)*binom(2*n,2*k+1)*E(2*k+1,2*z))"),
    entry("T3.2b", "B_{2k+1}(z) sum over 2(n-k)+1 against E(2z) sums, index 2n+1", Polynomial, 0, 2,
        "sum(k=0..n,4^(2*k+1)/(2*(n-k)+1)*binom(2*n+1,2*k+1)*B(2*k+1,z)) == \
         sum(k=0..n,2^(2*k+1)*binom(2*n+1,2*k+1)*E(2*k+1,2*z))-sum(k=0..n,2^(2*k)*binom(2*n+1,2*k)*E(2*k,2*z))"),
    entry("T3.3a", "B(3z) sums against 3^{2n} B_{2n}(z), index 2n", Polynomial, 0, 2,
        "sum(k=0..n,binom(2*n,2*k)*B(2*k,3*z))-sum(k=0..n-1,binom(2*n,2*k+1)*B(2*k+1,3*z)) == \
         2*sum(k=0..n-1,3^(2*k-1)*binom(2*n,2*k)*B(2*k,z))+3^(2*n)*B(2*n,z)"),
    entry("T3.3b", "B(3z) sums against 3^{2n+1} B_{2n+1}(z), index 2n+1", Polynomial, 0, 2,
        "sum(k=0..n,binom(2*n+1,2*k+1)*B(2*k+1,3*z))-sum(k=0..n,binom(2*n+1,2*k)*B(2*k,3*z)) == \
         2*sum(k=0..n-1,3^(2*k)*binom(2*n+1,2*k+1)*B(2*k+1,z))+3^(2*n+1)*B(2*n+1,z)"),
    entry("T3.4a", "alternating E_{4k-1} sum, index 4n", Polynomial, 1, 4,
        "sum(k=1..n,(-1)^k*2^(2*k+1)*k*binom(4*n,4*k)*E(4*k-1,z)) == \
         sum(k=1..n,(-1)^k*2^(2*k-1)*binom(4*n,4*k-1)*B(4*k-1,z))-sum(k=1..n,(-1)^k*2^(2*k-2)*binom(4*n,4*k-3)*B(4*k-3,z))"),
    entry("T3.4b", "alternating E_{4k-3} sum, index 4n-2", Polynomial, 1, 4,
        "sum(k=1..n,(-1)^k*2^(2*k+1)*(2*k-1)*binom(4*n-2,4*k-2)*E(4*k-3,z)) == \
         sum(k=1..n-1,(-1)^k*2^(2*k+1)*binom(4*n-2,4*k-1)*B(4*k-1,z))+sum(k=1..n,(-1)^k*2^(2*k)*binom(4*n-2,4*k-3)*B(4*k-3,z))"),
    entry("T3.4c", "alternating E_{4k} sum, index 4n+1", Polynomial, 1, 4,
        "sum(k=0..n,(-1)^k*2^(2*k)*(4*k+1)*binom(4*n+1,4*k+1)*E(4*k,z)) == \
         sum(k=0..n-1,(-1)^k*2^(2*k+1)*binom(4*n+1,4*k+2)*B(4*k+2,z))+sum(k=0..n,(-1)^k*2^(2*k)*binom(4*n+1,4*k)*B(4*k,z))"),
    entry("T3.4d", "alternating E_{4k+2} sum, index 4n+3", Polynomial, 1, 4,
        "sum(k=0..n,(-1)^k*2^(2*k+1)*(4*k+3)*binom(4*n+3,4*k+3)*E(4*k+2,z)) == \
         sum(k=0..n,(-1)^k*2^(2*k+1)*binom(4*n+3,4*k+2)*B(4*k+2,z))-sum(k=0..n,(-1)^k*2^(2*k)*binom(4*n+3,4*k)*B(4*k,z))"),
    entry("KV.B1", "B_n(1)", KnownValue, 1, 1, "B(n,1) == (-1)^n*BN(n)"),
    entry("KV.B16", "B_{2n}(1/6)", KnownValue, 1, 2,
        "B(2*n,1/6) == 1/2*(1-2^(1-2*n))*(1-3^(1-2*n))*BN(2*n)"),
    entry("KV.B13", "B_{2n}(1/3)", KnownValue, 1, 2, "B(2*n,1/3) == -1/2*(1-3^(1-2*n))*BN(2*n)"),
    entry("KV.B12", "B_n(1/2)", KnownValue, 1, 1, "B(n,1/2) == (2^(1-n)-1)*BN(n)"),
    entry("KV.B14", "B_n(1/4)", KnownValue, 1, 1,
        "B(n,1/4) == 2^(-n)*(2^(1-n)-1)*BN(n)-n*4^(-n)*EN(n-1)"),
    entry("KV.E0", "E_{n-1}(0)", KnownValue, 1, 1, "E(n-1,0) == 2/n*(1-2^n)*BN(n)"),
    entry("KV.E16", "E_{2n}(1/6)", KnownValue, 1, 2, "E(2*n,1/6) == 2^(-2*n-1)*(1+3^(-2*n))*EN(2*n)"),
    entry("N4.1", "E_n as a sum of B_{n-2k}", Number, 1, 1,
        "EN(n) == sum(k=0..floor(n,2),2^(n-2*k)/(2*k+1)*(2-2^(n-2*k))*binom(n,2*k)*BN(n-2*k))"),
    entry("N4.2", "B_{2k} sum equal to 1/(2n+1)", Number, 1, 2,
        "sum(k=1..n,(2^(2*k)-2)/(2*(n-k)+1)*binom(2*n,2*k)*BN(2*k)) == 1/(2*n+1)"),
    entry("N4.3", "vanishing sum of 2^k (2^k - E_{n-k}) B_k", Number, 1, 1,
        "sum(k=0..n,2^k*(2^k-EN(n-k))*binom(n,k)*BN(k)) == 0"),
    entry("N4.4", "(2n+1) E_{2n} as a double-B sum", Number, 1, 2,
        "(2*n+1)*EN(2*n) == \
         sum(k=0..n,(4^(k+1)-1)/(k+1)*(2^(2*k+2)-2^(2*n+1))*binom(2*n+1,2*k+1)*BN(2*k+2)*BN(2*n-2*k))"),
    entry("N4.5", "B_k (E_{n-k} - 1) sum against k E_{k-1} sum", Number, 1, 1,
        "sum(k=0..n,(2^k-2)*binom(n,k)*BN(k)*(EN(n-k)-1)) == sum(k=1..n,k*binom(n,k)*EN(k-1))"),
    Entry {
        id: "N4.6",
        label: "Gaussian-weighted alternating B_{n-k} sum, odd n split mod 4",
        group: Number,
        domain: Domain::Residue { start: 3, modulus: 2, residue: 1 },
        param: None,
        scale: 1,
        text: "sum(k=0..n,(-1)^k*(1+i^k)/(1+i)^k*binom(n,k)*BN(n-k)) == \
               (floor(n+3,4)-floor(n+2,4))*(-1)^floor(n+3,4)*2^((3-n)/2)*n",
    },
    entry("N4.7", "B_{2k} sum equal to 2n", Number, 1, 2,
        "sum(k=1..n,2^(2*k)*(2^(2*k)-1)*binom(2*n,2*k)*BN(2*k)) == 2*n"),
    entry("N4.8", "B_{2k} sum equal to 2n+1", Number, 1, 2,
        "sum(k=0..n,2^(2*k)*binom(2*n+1,2*k)*BN(2*k)) == 2*n+1"),
    entry("N4.9", "B_{2k} sum against (k+1/2) E_{2k} sum", Number, 1, 2,
        "sum(k=0..n,(2^(2*k-1)-1)*(1-3^(1-2*k))*binom(2*n+1,2*k)*BN(2*k)) == \
         sum(k=0..n,(k+1/2)*(1+3^(-2*k))*binom(2*n+1,2*k+1)*EN(2*k))"),
    entry("N4.10", "B_{2k} sum over k equal to 2", Number, 1, 2,
        "sum(k=1..n,2^(2*k)/k*(2^(2*k)-1)*binom(2*n-1,2*k-1)*BN(2*k)) == 2"),
    entry("N4.11", "B_{2n} through lower even-index numbers", Number, 1, 2,
        "1/2*(3^(2*n)-1)*BN(2*n) == sum(k=0..n-1,(1-3^(2*k-1))*binom(2*n,2*k)*BN(2*k))"),
    entry("N4.12", "alternating B_{4k} sum equal to 2n", Number, 1, 4,
        "sum(k=0..n,(-1)^k*2^(2*k)*(4^(2*k)-1)*binom(4*n,4*k)*BN(4*k)) == 2*n"),
    entry("N4.13", "alternating B_{4k+2} sum equal to 2n+1", Number, 1, 4,
        "sum(k=0..n,(-1)^k*2^(2*k+1)*(4^(2*k+1)-1)*binom(4*n+2,4*k+2)*BN(4*k+2)) == 2*n+1"),
    entry("N4.14", "alternating B_{4k+2} and B_{4k} sums equal to 4n+1", Number, 1, 4,
        "sum(k=0..n-1,(-1)^k*2^(2*k+1)*binom(4*n+1,4*k+2)*BN(4*k+2))+\
         sum(k=0..n,(-1)^k*2^(2*k)*binom(4*n+1,4*k)*BN(4*k)) == 4*n+1"),
    entry("N4.15", "alternating B_{4k+2} sum against B_{4k} sum, index 4n+3", Number, 1, 4,
        "sum(k=0..n,(-1)^k*2^(2*k+1)*binom(4*n+3,4*k+2)*BN(4*k+2)) == \
         sum(k=0..n,(-1)^k*2^(2*k)*binom(4*n+3,4*k)*BN(4*k))"),
    entry("ABS.1", "n E_{n-1} as a double-B sum (audit)", Audit, 1, 1,
        "n*EN(n-1) == sum(k=1..floor(n,2),(2^(2*k)-1)/k*(2^(2*k)-2^n)*binom(n,2*k-1)*BN(2*k)*BN(n-2*k))"),
];

/// Every catalog entry, in display order.
pub fn catalog() -> &'static [Identity] {
    static CATALOG: OnceLock<Vec<Identity>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        ENTRIES
            .iter()
            .map(|e| {
                let params: Vec<&str> = e.param.into_iter().collect();
                let expr = parse_identity_with(e.text, &params)
                    .unwrap_or_else(|err| panic!("catalog entry {} does not parse: {err}", e.id));
                Identity {
                    id: e.id,
                    paper_eq: e.label,
                    group: e.group,
                    domain: e.domain,
                    param: e.param,
                    index_scale: e.scale,
                    canonical: e.text,
                    expr,
                }
            })
            .collect()
    })
}

pub fn lookup(id: &str) -> Option<&'static Identity> {
    catalog().iter().find(|e| e.id == id)
}
