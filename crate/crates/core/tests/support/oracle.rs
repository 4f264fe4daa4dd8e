//! Divisor-class oracle for `y^2 = f(x)` over `F_p`, independent of Cantor's
//! algorithm.
//!
//! Ideals of `A = F_p[x, y]/(y^2 - f)` are free `F_p[x]`-modules of rank 2 in
//! the basis `1, y`, kept in Hermite normal form `(a, 0), (c, d)` with `a, d`
//! monic and `deg c < deg a`. With one point at infinity, `Cl(A) = Pic^0`, and
//! an ideal `J` of norm degree `n` is principal iff it contains a nonzero
//! `h = P + Qy` with `deg N(h) = max(2 deg P, 2 deg Q + 5) ≤ n`.

#![allow(dead_code)]

pub type Pol = Vec<u64>;

#[derive(Debug, Clone)]
pub struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Self {
        Fp { p }
    }

    pub fn red(&self, a: i64) -> u64 {
        a.rem_euclid(self.p as i64) as u64
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(!a.is_multiple_of(self.p));
        self.pow(a, self.p - 2)
    }

    // polynomial helpers

    pub fn trim(&self, mut a: Pol) -> Pol {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn deg(&self, a: &Pol) -> i64 {
        a.len() as i64 - 1
    }

    pub fn padd(&self, a: &Pol, b: &Pol) -> Pol {
        let n = a.len().max(b.len());
        let r = (0..n)
            .map(|i| self.add(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect();
        self.trim(r)
    }

    pub fn psub(&self, a: &Pol, b: &Pol) -> Pol {
        let n = a.len().max(b.len());
        let r = (0..n)
            .map(|i| self.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect();
        self.trim(r)
    }

    pub fn pmul(&self, a: &Pol, b: &Pol) -> Pol {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut r = vec![0; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                r[i + j] = self.add(r[i + j], self.mul(*x, *y));
            }
        }
        self.trim(r)
    }

    pub fn pdivrem(&self, a: &Pol, b: &Pol) -> (Pol, Pol) {
        assert!(!b.is_empty(), "division by zero polynomial");
        let mut r = a.clone();
        let db = b.len() - 1;
        let li = self.inv(b[db]);
        if r.len() <= db {
            return (vec![], self.trim(r));
        }
        let mut q = vec![0; r.len() - db];
        for i in (db..r.len()).rev() {
            let c = self.mul(r[i], li);
            if c == 0 {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                r[i - db + j] = self.sub(r[i - db + j], self.mul(c, *bj));
            }
            q[i - db] = c;
        }
        r.truncate(db);
        (self.trim(q), self.trim(r))
    }

    pub fn prem(&self, a: &Pol, b: &Pol) -> Pol {
        self.pdivrem(a, b).1
    }

    pub fn monic(&self, a: &Pol) -> Pol {
        match a.last() {
            None => vec![],
            Some(&l) => {
                let li = self.inv(l);
                a.iter().map(|c| self.mul(*c, li)).collect()
            }
        }
    }

    pub fn eval(&self, a: &Pol, x: u64) -> u64 {
        a.iter()
            .rev()
            .fold(0, |acc, c| self.add(self.mul(acc, x), *c))
    }

    pub fn is_square(&self, a: u64) -> bool {
        a == 0 || self.pow(a, (self.p - 1) / 2) == 1
    }

    /// Rank of a matrix over `F_p`.
    pub fn rank(&self, mut m: Vec<Vec<u64>>) -> usize {
        let rows = m.len();
        if rows == 0 {
            return 0;
        }
        let cols = m[0].len();
        let mut r = 0;
        for col in 0..cols {
            let Some(piv) = (r..rows).find(|&i| m[i][col] != 0) else {
                continue;
            };
            m.swap(r, piv);
            let inv = self.inv(m[r][col]);
            for x in m[r].iter_mut() {
                *x = self.mul(*x, inv);
            }
            for i in 0..rows {
                if i != r && m[i][col] != 0 {
                    let c = m[i][col];
                    let pivot_row = m[r].clone();
                    for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                        *x = self.sub(*x, self.mul(c, *y));
                    }
                }
            }
            r += 1;
        }
        r
    }
}

/// Ideal in Hermite normal form: elements `α a + β (c + d y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    pub a: Pol,
    pub c: Pol,
    pub d: Pol,
}

pub struct Oracle {
    pub k: Fp,
    /// `f`, low degree first, monic of degree 5.
    pub f: Pol,
}

impl Oracle {
    pub fn new(p: u64, lower: [i64; 5]) -> Self {
        let k = Fp::new(p);
        let mut f: Pol = lower.iter().map(|&c| k.red(c)).collect();
        f.push(1);
        Oracle { k, f }
    }

    pub fn unit_ideal(&self) -> Ideal {
        Ideal {
            a: vec![1],
            c: vec![],
            d: vec![1],
        }
    }

    /// Ideal of the effective divisor cut out by `u = 0, y = v(x)`.
    pub fn ideal_uv(&self, u: &Pol, v: &Pol) -> Ideal {
        let k = &self.k;
        let c = k.prem(&k.psub(&vec![], v), u);
        self.hnf(vec![(u.clone(), vec![]), (c, vec![1])])
    }

    /// Ideal of a single affine point.
    pub fn point_ideal(&self, x: u64, y: u64) -> Ideal {
        self.ideal_uv(&vec![self.k.sub(0, x), 1], &self.k.trim(vec![y]))
    }

    /// Image under `y ↦ -y`.
    pub fn conj(&self, i: &Ideal) -> Ideal {
        let k = &self.k;
        let gens = vec![(i.a.clone(), vec![]), (i.c.clone(), k.psub(&vec![], &i.d))];
        self.hnf(gens)
    }

    /// Hermite normal form of the `F_p[x]`-module generated by `gens`
    /// (`(P, Q)` meaning `P + Q y`), which must have rank 2.
    pub fn hnf(&self, mut gens: Vec<(Pol, Pol)>) -> Ideal {
        let k = &self.k;
        gens.retain(|(p, q)| !(p.is_empty() && q.is_empty()));
        // Euclid on the y-coordinates.
        loop {
            let nonzero: Vec<usize> = (0..gens.len()).filter(|&i| !gens[i].1.is_empty()).collect();
            if nonzero.len() <= 1 {
                break;
            }
            let piv = *nonzero
                .iter()
                .min_by_key(|&&i| gens[i].1.len())
                .expect("nonempty");
            let (pp, pq) = gens[piv].clone();
            for &i in &nonzero {
                if i == piv {
                    continue;
                }
                let (q, _) = k.pdivrem(&gens[i].1, &pq);
                gens[i].0 = k.psub(&gens[i].0, &k.pmul(&q, &pp));
                gens[i].1 = k.psub(&gens[i].1, &k.pmul(&q, &pq));
            }
        }
        let yi = (0..gens.len())
            .find(|&i| !gens[i].1.is_empty())
            .expect("rank-2 module");
        let (c, d) = gens.remove(yi);
        let mut a: Pol = vec![];
        for (p, _) in gens {
            a = self.gcd(&a, &p);
        }
        assert!(!a.is_empty(), "rank-2 module");
        let lead = *d.last().expect("nonzero");
        let li = k.inv(lead);
        let d = k.monic(&d);
        let c: Pol = k.trim(c.iter().map(|x| k.mul(*x, li)).collect());
        let c = k.prem(&c, &a);
        Ideal { a, c, d }
    }

    fn gcd(&self, a: &Pol, b: &Pol) -> Pol {
        let k = &self.k;
        let (mut r0, mut r1) = (a.clone(), b.clone());
        while !r1.is_empty() {
            let r = k.prem(&r0, &r1);
            r0 = std::mem::replace(&mut r1, r);
        }
        k.monic(&r0)
    }

    fn elem_mul(&self, (p1, q1): &(Pol, Pol), (p2, q2): &(Pol, Pol)) -> (Pol, Pol) {
        let k = &self.k;
        let p = k.padd(&k.pmul(p1, p2), &k.pmul(&k.pmul(q1, q2), &self.f));
        let q = k.padd(&k.pmul(p1, q2), &k.pmul(p2, q1));
        (p, q)
    }

    fn gens(&self, i: &Ideal) -> [(Pol, Pol); 2] {
        [(i.a.clone(), vec![]), (i.c.clone(), i.d.clone())]
    }

    pub fn mul(&self, i: &Ideal, j: &Ideal) -> Ideal {
        let y = (vec![], vec![1]);
        let mut gens = Vec::new();
        for g in self.gens(i) {
            for h in self.gens(j) {
                let prod = self.elem_mul(&g, &h);
                gens.push(self.elem_mul(&prod, &y));
                gens.push(prod);
            }
        }
        self.hnf(gens)
    }

    pub fn norm_degree(&self, i: &Ideal) -> i64 {
        self.k.deg(&i.a) + self.k.deg(&i.d)
    }

    /// `dim { h ∈ J : deg N(h) ≤ n }`.
    pub fn sections(&self, j: &Ideal, n: i64) -> usize {
        if n < 0 {
            return 0;
        }
        let k = &self.k;
        let p_max = n / 2;
        let q_max = if n >= 5 { (n - 5) / 2 } else { -1 };
        let beta_max = q_max - k.deg(&j.d);
        let n_alpha = (p_max + 1) as usize;
        let n_beta = if beta_max >= 0 {
            (beta_max + 1) as usize
        } else {
            0
        };
        let da = k.deg(&j.a) as usize;
        // Unknowns: coefficients of P (deg ≤ p_max) and β (deg ≤ beta_max).
        // Condition: (P - β c) mod a = 0, i.e. da linear equations.
        let cols = n_alpha + n_beta;
        if cols == 0 {
            return 0;
        }
        let mut columns: Vec<Vec<u64>> = Vec::with_capacity(cols);
        for i in 0..n_alpha {
            let mut mono = vec![0; i + 1];
            mono[i] = 1;
            let r = k.prem(&mono, &j.a);
            columns.push((0..da).map(|t| *r.get(t).unwrap_or(&0)).collect());
        }
        for i in 0..n_beta {
            let mut mono = vec![0; i + 1];
            mono[i] = 1;
            let r = k.prem(&k.psub(&vec![], &k.pmul(&mono, &j.c)), &j.a);
            columns.push((0..da).map(|t| *r.get(t).unwrap_or(&0)).collect());
        }
        let matrix: Vec<Vec<u64>> = (0..da)
            .map(|row| columns.iter().map(|col| col[row]).collect())
            .collect();
        cols - k.rank(matrix)
    }

    pub fn is_principal(&self, j: &Ideal) -> bool {
        self.sections(j, self.norm_degree(j)) > 0
    }

    /// Classes `[I] = [J]` in `Pic^0`.
    pub fn same_class(&self, i: &Ideal, j: &Ideal) -> bool {
        self.is_principal(&self.mul(i, &self.conj(j)))
    }

    /// `h^0(D + m[∞])` for the effective divisor `D` with ideal `i`.
    pub fn h0(&self, i: &Ideal, m: i64) -> usize {
        let k = self.norm_degree(i);
        self.sections(&self.conj(i), m + 2 * k)
    }

    /// Affine points over `F_p`.
    pub fn affine_points(&self) -> Vec<(u64, u64)> {
        let k = &self.k;
        let mut out = vec![];
        for x in 0..k.p {
            let fx = k.eval(&self.f, x);
            for y in 0..k.p {
                if k.mul(y, y) == fx {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// `(N_1, N_2)`: projective point counts over `F_p` and `F_{p^2}`.
    pub fn point_counts(&self) -> (u64, u64) {
        let k = &self.k;
        let n1 = 1 + self.affine_points().len() as u64;
        let gf = Fp2::new(k.clone());
        let mut n2 = 1u64;
        for a in 0..k.p {
            for b in 0..k.p {
                let x = (a, b);
                let fx = self
                    .f
                    .iter()
                    .rev()
                    .fold((0, 0), |acc, c| gf.add(gf.mul(acc, x), (*c, 0)));
                n2 += match gf.chi(fx) {
                    0 => 1,
                    1 => 2,
                    _ => 0,
                };
            }
        }
        (n1, n2)
    }

    /// `|J(F_p)| = (N_1^2 + N_2)/2 - p`: effective degree-2 divisors, with the
    /// canonical pencil counted once.
    pub fn jacobian_order(&self) -> u64 {
        let (n1, n2) = self.point_counts();
        (n1 * n1 + n2) / 2 - self.k.p
    }
}

/// `F_{p^2} = F_p(√r)` for a non-residue `r`.
pub struct Fp2 {
    k: Fp,
    r: u64,
}

impl Fp2 {
    pub fn new(k: Fp) -> Self {
        let r = (2..k.p).find(|&r| !k.is_square(r)).expect("odd p");
        Fp2 { k, r }
    }

    pub fn add(&self, a: (u64, u64), b: (u64, u64)) -> (u64, u64) {
        (self.k.add(a.0, b.0), self.k.add(a.1, b.1))
    }

    pub fn mul(&self, a: (u64, u64), b: (u64, u64)) -> (u64, u64) {
        let k = &self.k;
        (
            k.add(k.mul(a.0, b.0), k.mul(self.r, k.mul(a.1, b.1))),
            k.add(k.mul(a.0, b.1), k.mul(a.1, b.0)),
        )
    }

    fn pow(&self, mut a: (u64, u64), mut e: u64) -> (u64, u64) {
        let mut r = (1, 0);
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    /// Quadratic character: 0, 1, or -1 (as `u8` 2).
    pub fn chi(&self, a: (u64, u64)) -> u8 {
        if a == (0, 0) {
            return 0;
        }
        let q = self.k.p * self.k.p;
        if self.pow(a, (q - 1) / 2) == (1, 0) {
            1
        } else {
            2
        }
    }
}
