//! Source data, transcribed as printed. Entries that disagree with computation
//! carry an erratum note and, where the intended value is unambiguous, a corrected text.

pub(super) enum Source {
    /// Prefactor literal and rows of whitespace-separated entries, rows split by `;`.
    Matrix { prefactor: &'static str, rows: &'static str },
    /// Explicit polynomial literal.
    Poly(&'static str),
    /// Linear combination (coefficient literal, catalog key).
    Combo(&'static [(&'static str, &'static str)]),
    PolyList(&'static [&'static str]),
    /// Comma-separated `[a:b:c:d]` points.
    Points(&'static str),
    /// Two points spanning a line.
    Line(&'static str, &'static str),
    /// Header row then body rows, cells separated by `|`, rows by `;`.
    Table(&'static str),
    /// Product of catalog matrices such as `T^4*S*T*S`, optionally compared against a key.
    Word { word: &'static str, target: Option<&'static str> },
    /// Generator words of a group, `,`-separated, plus the mode it is considered in.
    Recipe(&'static str),
}

pub(super) struct Raw {
    pub key: &'static str,
    pub location: &'static str,
    pub source: Source,
    pub erratum: Option<(&'static str, Option<Source>)>,
}

const fn raw(key: &'static str, location: &'static str, source: Source) -> Raw {
    Raw {
        key,
        location,
        source,
        erratum: None,
    }
}

use Source::*;

pub(super) static ENTRIES: &[Raw] = &[
    // Heisenberg generators
    raw("S1", "§3 Heisenberg generators: \"generated by the matrices S_1, S_2, T_1, T_2\"",
        Matrix { prefactor: "1", rows: "0 0 1 0; 0 0 0 1; 1 0 0 0; 0 1 0 0" }),
    raw("S2", "§3 Heisenberg generators: \"generated by the matrices S_1, S_2, T_1, T_2\"",
        Matrix { prefactor: "1", rows: "0 1 0 0; 1 0 0 0; 0 0 0 1; 0 0 1 0" }),
    raw("T1", "§3 Heisenberg generators: \"generated by the matrices S_1, S_2, T_1, T_2\"",
        Matrix { prefactor: "1", rows: "1 0 0 0; 0 1 0 0; 0 0 -1 0; 0 0 0 -1" }),
    raw("T2", "§3 Heisenberg generators: \"generated by the matrices S_1, S_2, T_1, T_2\"",
        Matrix { prefactor: "1", rows: "1 0 0 0; 0 -1 0 0; 0 0 1 0; 0 0 0 -1" }),
    raw("iI", "§3 extended Heisenberg group: \"Let ℍ=⟨H,±iI_4⟩\"",
        Matrix { prefactor: "i", rows: "1 0 0 0; 0 1 0 0; 0 0 1 0; 0 0 0 1" }),
    // Normalizer elements; (1+i)/sqrt(2) is the primitive eighth root z{8}
    raw("S", "§3 normalizer elements: \"S^4=T^5=-I_4\"",
        Matrix { prefactor: "z{8}", rows: "i 0 0 0; 0 i 0 0; 0 0 1 0; 0 0 0 1" }),
    raw("T", "§3 normalizer elements: \"S^4=T^5=-I_4\"",
        Matrix { prefactor: "1/2*(1+i)", rows: "-i 0 0 i; 0 1 1 0; 1 0 0 1; 0 -i i 0" }),
    Raw {
        key: "A",
        location: "§3 matrix A: \"A=T^{4}\\cdot S\\cdot T\\cdot S\"",
        source: Matrix { prefactor: "1/2*(1+i)", rows: "1 0 0 -1; 0 1 1 0; 0 i -i 0; i 0 0 -i" },
        erratum: Some((
            "printed matrix is singular (row 4 = i*row 1); the word T^4*S*T*S has -i at entry (4,1)",
            Some(Matrix { prefactor: "1/2*(1+i)", rows: "1 0 0 -1; 0 1 1 0; 0 i -i 0; -i 0 0 -i" }),
        )),
    },
    Raw {
        key: "B",
        location: "§3 matrix B: \"B=S\\cdot T^{4}\\cdot S\\cdot T\\cdot S\\cdot T^2\\cdot S\\cdot T^{3}\\cdot S\\cdot T\\cdot S\\cdot T^3\\cdot S\\cdot T^{3}\\cdot S\"",
        source: Matrix { prefactor: "1/2*(1+i)", rows: "-1 i 0 0; 1 i 1 0; 0 0 i -1; 0 0 -i -1" },
        erratum: Some((
            "printed entry (2,3) is 1; the fifteen-factor word has 0 there",
            Some(Matrix { prefactor: "1/2*(1+i)", rows: "-1 i 0 0; 1 i 0 0; 0 0 i -1; 0 0 -i -1" }),
        )),
    },
    raw("R", "§3 matrix R: \"Then R is also contained in N\"",
        Matrix { prefactor: "1/2*(z{8} + z{8}^7)", rows: "1 i 0 0; i 1 0 0; 0 0 i 1; 0 0 -1 -i" }),
    raw("A-word", "§3: \"A=T^{4}\\cdot S\\cdot T\\cdot S\"", Word { word: "T^4*S*T*S", target: Some("A") }),
    raw("B-word", "§3: \"B=S\\cdot T^{4}\\cdot S\\cdot T\\cdot S\\cdot T^2\\cdot S\\cdot T^{3}\\cdot S\\cdot T\\cdot S\\cdot T^3\\cdot S\\cdot T^{3}\\cdot S\"",
        Word { word: "S*T^4*S*T*S*T^2*S*T^3*S*T*S*T^3*S*T^3*S", target: Some("B") }),
    // Groups
    raw("H", "§3: \"Since |H|=32\"", Recipe("S1, S2, T1, T2")),
    raw("HH", "§3: \"Let ℍ=⟨H,±iI_4⟩\"", Recipe("S1, S2, T1, T2, iI")),
    raw("G80", "§3: \"generated by ℍ and the matrix T\"", Recipe("S1, S2, T1, T2, iI, T")),
    raw("G160", "§3: \"generated by ℍ and the matrices T and R^2\"", Recipe("S1, S2, T1, T2, iI, T, R^2")),
    raw("G320", "§3: \"generated by ℍ and the matrices T and R\"", Recipe("S1, S2, T1, T2, iI, T, R")),
    raw("G144", "§3: \"G_144 is a finite subgroup of order 576\"", Recipe("S1, S2, T1, T2, iI, A-word, B-word")),
    // Heisenberg-invariant quartics
    raw("U4", "§3: \"U_4 is generated by the polynomials\"",
        PolyList(&["x^4 + y^4 + z^4 + w^4", "x^2*y^2 + z^2*w^2", "x^2*z^2 + y^2*w^2", "x^2*w^2 + y^2*z^2", "x*y*z*w"])),
    raw("t0", "§3 quartics t_i: \"t_0+t_1+t_2+t_3+t_4+t_5=0\"",
        Poly("1/3*x^4 + 1/3*y^4 + 1/3*z^4 + 1/3*w^4 - 2*x^2*y^2 - 2*z^2*w^2 - 2*x^2*z^2 - 2*y^2*w^2 - 2*x^2*w^2 - 2*y^2*z^2")),
    raw("t1", "§3 quartics t_i: \"t_0+t_1+t_2+t_3+t_4+t_5=0\"",
        Poly("1/3*x^4 + 1/3*y^4 + 1/3*z^4 + 1/3*w^4 - 2*x^2*y^2 - 2*z^2*w^2 + 2*x^2*z^2 + 2*y^2*w^2 + 2*x^2*w^2 + 2*y^2*z^2")),
    raw("t2", "§3 quartics t_i: \"t_0+t_1+t_2+t_3+t_4+t_5=0\"",
        Poly("1/3*x^4 + 1/3*y^4 + 1/3*z^4 + 1/3*w^4 + 2*x^2*y^2 + 2*z^2*w^2 - 2*x^2*z^2 - 2*y^2*w^2 + 2*x^2*w^2 + 2*y^2*z^2")),
    raw("t3", "§3 quartics t_i: \"t_0+t_1+t_2+t_3+t_4+t_5=0\"",
        Poly("1/3*x^4 + 1/3*y^4 + 1/3*z^4 + 1/3*w^4 + 2*x^2*y^2 + 2*z^2*w^2 + 2*x^2*z^2 + 2*y^2*w^2 - 2*x^2*w^2 - 2*y^2*z^2")),
    raw("t4", "§3 quartics t_i: \"t_0+t_1+t_2+t_3+t_4+t_5=0\"",
        Poly("-2/3*x^4 - 2/3*y^4 - 2/3*z^4 - 2/3*w^4 + 8*x*y*z*w")),
    raw("t5", "§3 quartics t_i: \"t_0+t_1+t_2+t_3+t_4+t_5=0\"",
        Poly("-2/3*x^4 - 2/3*y^4 - 2/3*z^4 - 2/3*w^4 - 8*x*y*z*w")),
    raw("S6-permutations", "§3 remark on the S_6-action: \"as the cycle (t_0 t_4 t_2 t_5 t_1)\"",
        Table("element | permutation; T | (0 4 2 5 1); -S | (0 1)(2 3)(4 5); A | (0 5 2)(1 3 4); B | (0 2 5)(1 3 4)")),
    // Semi-invariants of G144
    raw("p0", "§3: \"Up to scaling, all homogeneous semi-invariants\"",
        Combo(&[("-1/4", "t0"), ("-1/4", "t2"), ("-1/4", "t5")])),
    raw("p1", "§3: \"Up to scaling, all homogeneous semi-invariants\"",
        Combo(&[("-z{3}", "t0"), ("-1", "t2"), ("-z{3}^2", "t5")])),
    raw("p2", "§3: \"Up to scaling, all homogeneous semi-invariants\"",
        Combo(&[("1 + z{3}", "t0"), ("(1 + z{3})*z{3}^2", "t5"), ("(1 + z{3})*z{3}", "t2")])),
    raw("p3", "§3: \"Up to scaling, all homogeneous semi-invariants\"",
        Combo(&[("1 + z{3}", "t1"), ("(1 + z{3})*z{3}^2", "t4"), ("(1 + z{3})*z{3}", "t3")])),
    raw("p4", "§3: \"Up to scaling, all homogeneous semi-invariants\"",
        Combo(&[("-z{3}", "t1"), ("-1", "t3"), ("-z{3}^2", "t4")])),
    raw("p0-square", "§3: \"p_0=(wy+xz)^2\"", Poly("w^2*y^2 + 2*x*y*z*w + x^2*z^2")),
    // T-eigenvectors
    raw("q0", "§3: \"is the only G_80-invariant homogeneous quartic polynomial\"",
        Poly("1/2*w^4 + 1/2*y^4 + 1/2*z^4 + 1/2*x^4 + 3*x^2*y^2 + 3*z^2*w^2 + 3*x^2*z^2 + 3*y^2*w^2 - 3*x^2*w^2 - 3*y^2*z^2")),
    Raw {
        key: "q0-formula",
        location: "§3 eigenvectors of T: \"q_0=t_0+t_1+t_2+t_3+t_4\"",
        source: Combo(&[("1", "t0"), ("1", "t1"), ("1", "t2"), ("1", "t3"), ("1", "t4")]),
        erratum: Some((
            "t0+t1+t2+t3+t4 equals -t5, which T does not fix; the displayed expansion of q0 is 3/2*t3",
            Some(Combo(&[("3/2", "t3")])),
        )),
    },
    raw("q1", "§3: \"q_i is the eigenvector of T that corresponds to the eigenvalue\"",
        Combo(&[("z{5}^4", "t4"), ("z{5}^3", "t2"), ("z{5}^2", "t5"), ("z{5}", "t1"), ("1", "t0")])),
    raw("q2", "§3: \"q_i is the eigenvector of T that corresponds to the eigenvalue\"",
        Combo(&[("z{5}^4", "t5"), ("z{5}^3", "t4"), ("z{5}^2", "t1"), ("z{5}", "t2"), ("1", "t0")])),
    raw("q3", "§3: \"q_i is the eigenvector of T that corresponds to the eigenvalue\"",
        Combo(&[("z{5}^4", "t2"), ("z{5}^3", "t1"), ("z{5}^2", "t4"), ("z{5}", "t5"), ("1", "t0")])),
    raw("q4", "§3: \"q_i is the eigenvector of T that corresponds to the eigenvalue\"",
        Combo(&[("z{5}^4", "t1"), ("z{5}^3", "t5"), ("z{5}^2", "t2"), ("z{5}", "t4"), ("1", "t0")])),
    // Surfaces
    raw("S0@80", "§5: \"the surface S_0 is smooth\"", Combo(&[("1", "q0")])),
    raw("S1@80", "§5 quartic surfaces: \"Sing(S_1)=Σ_16^1\"", Combo(&[("1", "q1")])),
    raw("S2@80", "§5 quartic surfaces: \"Sing(S_1)=Σ_16^1\"", Combo(&[("1", "q2")])),
    raw("S3@80", "§5 quartic surfaces: \"Sing(S_1)=Σ_16^1\"", Combo(&[("1", "q3")])),
    raw("S4@80", "§5 quartic surfaces: \"Sing(S_1)=Σ_16^1\"", Combo(&[("1", "q4")])),
    raw("S1@144", "§4: \"Sing(S_1)=Sing(S_2)=Σ_12\"", Combo(&[("1", "p1")])),
    raw("S2@144", "§4: \"Sing(S_1)=Sing(S_2)=Σ_12\"", Combo(&[("1", "p2")])),
    raw("S3@144", "§4: \"Sing(S_1)=Sing(S_2)=Σ_12\"", Combo(&[("1", "p3")])),
    raw("S4@144", "§4: \"Sing(S_1)=Sing(S_2)=Σ_12\"", Combo(&[("1", "p4")])),
    // Quadrics
    raw("Q1", "§3 quadrics: \"xw+yz=0, \\quad xz+yw=0\"", Poly("x^2 + y^2 + z^2 + w^2")),
    raw("Q2", "§3 quadrics: \"xw+yz=0, \\quad xz+yw=0\"", Poly("x*w + y*z")),
    raw("Q3", "§3 quadrics: \"xw+yz=0, \\quad xz+yw=0\"", Poly("x*z + y*w")),
    raw("Q4", "§3 quadrics: \"xw+yz=0, \\quad xz+yw=0\"", Poly("x^2 + y^2 - z^2 - w^2")),
    raw("Q5", "§3 quadrics: \"xw+yz=0, \\quad xz+yw=0\"", Poly("x^2 - y^2 - z^2 + w^2")),
    raw("Q6", "§3 quadrics: \"xy+zw=0, \\quad xy-zw=0\"", Poly("x^2 - y^2 + z^2 - w^2")),
    raw("Q7", "§3 quadrics: \"xy+zw=0, \\quad xy-zw=0\"", Poly("x*y + z*w")),
    raw("Q8", "§3 quadrics: \"xy+zw=0, \\quad xy-zw=0\"", Poly("x*y - z*w")),
    raw("Q9", "§3 quadrics: \"xy+zw=0, \\quad xy-zw=0\"", Poly("x*z - y*w")),
    raw("Q10", "§3 quadrics: \"xy+zw=0, \\quad xy-zw=0\"", Poly("x*w - y*z")),
    // Line seeds; row k of the line table is T^(k-1) applied to the seed
    raw("ell", "§3: \"passes through the points [0:i:1:0] and [1:0:0:-i]\"", Line("[0:i:1:0]", "[1:0:0:-i]")),
    raw("ell-check", "§3: \"passes through the points [0:-i:1:0] and [1:0:0:i]\"", Line("[0:-i:1:0]", "[1:0:0:i]")),
    raw("ell-prime", "§3: \"passes through the points [1:0:-i:0] and [0:1:0:-i]\"", Line("[1:0:-i:0]", "[0:1:0:-i]")),
    raw("ell-check-prime", "§3: \"passes through the points [1:0:i:0] and [0:1:0:i]\"", Line("[1:0:i:0]", "[0:1:0:i]")),
    raw("ell-dprime", "§3: \"passes through the points [1:i:0:0] and [0:0:1:-i]\"", Line("[1:i:0:0]", "[0:0:1:-i]")),
    raw("ell-check-dprime", "§3: \"passes through the points [1:-i:0:0] and [0:0:1:i]\"", Line("[1:-i:0:0]", "[0:0:1:i]")),
    raw("Table1", "§3 line table: \"Ten H-invariant quadrics and thirty lines in them\"",
        Table("line | Q1 | Q2 | Q3 | Q4 | Q5 | Q6 | Q7 | Q8 | Q9 | Q10;\
            ell_1 | + | - | - | - | + | - | + | - | + | -;\
            ell_2 | - | - | - | + | + | - | - | + | - | +;\
            ell_3 | - | - | + | + | - | + | + | - | - | -;\
            ell_4 | - | + | + | - | - | - | - | - | + | +;\
            ell_5 | + | + | - | - | - | + | - | + | - | -;\
            ellc_1 | + | - | - | - | + | - | + | - | + | -;\
            ellc_2 | - | - | - | + | + | - | - | + | - | +;\
            ellc_3 | - | - | + | + | - | + | + | - | - | -;\
            ellc_4 | - | + | + | - | - | - | - | - | + | +;\
            ellc_5 | + | + | - | - | - | + | - | + | - | -;\
            ell'_1 | + | - | - | - | - | + | + | - | - | +;\
            ell'_2 | - | - | - | - | + | + | - | - | + | +;\
            ell'_3 | - | - | - | + | - | + | - | + | + | -;\
            ell'_4 | - | - | + | - | - | - | + | + | + | -;\
            ell'_5 | - | + | - | - | - | - | + | + | - | +;\
            ellc'_1 | + | - | - | - | - | + | + | - | - | +;\
            ellc'_2 | - | - | - | - | + | + | - | - | + | +;\
            ellc'_3 | - | - | - | + | - | + | - | + | + | -;\
            ellc'_4 | - | - | + | - | - | - | + | + | + | -;\
            ellc'_5 | - | + | - | - | - | - | + | + | - | +;\
            ell''_1 | + | + | - | + | - | - | - | - | + | -;\
            ell''_2 | + | - | + | - | + | - | - | + | - | -;\
            ell''_3 | - | + | - | + | + | - | + | - | - | -;\
            ell''_4 | + | - | + | + | - | - | - | - | - | +;\
            ell''_5 | - | + | + | - | + | + | - | - | - | -;\
            ellc''_1 | + | + | - | + | - | - | - | - | + | -;\
            ellc''_2 | + | - | + | - | + | - | - | + | - | -;\
            ellc''_3 | - | + | - | + | + | - | + | - | - | -;\
            ellc''_4 | + | - | + | + | - | - | - | - | - | +;\
            ellc''_5 | - | + | + | - | + | + | - | - | - | -")),
    // Point lists
    Raw {
        key: "Sigma20",
        location: "§3 intersection points of the thirty lines: \"Σ_20 be the subset in P^3 that consists of the 20 points\"",
        source: Points("[i:0:0:1], [0:i:1:0], [1:0:1:0], [0:-1:0:1], [1:i:-i:1], \
            [1:-i:i:1], [0:0:-1:1], [0:0:1:1], [-1:i:-i:1], [1:i:i:1], \
            [-i:0:0:1], [0:-i:1:0], [1:0:1:0], [0:1:0:1], [-1:i:i:1], \
            [1:-i:-i:1], [-1:1:0:0], [1:1:0:0], [-1:-i:i:1], [1:-i:-i:1]"),
        erratum: Some(("[1:0:1:0] and [1:-i:-i:1] are each printed twice; the computed orbit is authoritative", None)),
    },
    raw("Sigma20-prime", "§3: \"Σ_20' be the subset in P^3 that consists of the 20 points\"",
        Points("[-i:i:-1:1], [i:0:1:0], [i:i:1:1], [0:i:0:1], [-1:1:-1:1], \
            [i:-i:-1:1], [1:-1:-1:1], [-1:0:0:1], [-1:-1:1:1], [0:-1:1:0], \
            [1:0:0:0], [1:0:0:1], [0:0:0:1], [-i:0:1:0], [0:0:1:0], \
            [-i:-i:1:1], [0:-i:0:1], [1:1:1:1], [0:1:1:0], [0:1:0:0]")),
    Raw {
        key: "Sigma20-dprime",
        location: "§3: \"Σ_20'' be the subset in P^3 that consists of the 20 points\"",
        source: Points("[i:-1:i:1], [0:0:i:1], [-i:1:i:1], [-i:1:0:0], [-i:-1:i:1], \
            [-i:i:1:1], [-i:1:-i:1], [i:-i:-1:1], [1:-1:1:1], [i:-1:-i:1], \
            [1:-1:-1:1], [i:1:0:0], [i:1:i:1], [i:-i:1:1], [-1:1:1:1], \
            [i:1:-i:1], [0:0:-i:1], [i:-1:-i:1], [i:i:-1:1], [1:1:-1:1]"),
        erratum: Some(("[i:-1:-i:1] is printed twice and some printed points lie outside the orbit; the computed orbit is authoritative", None)),
    },
    raw("Sigma12", "§4: \"Denote by Σ_12 the subset in P^3 that consists of the 12 points\"",
        Points("[0:1:0:1], [0:-1:0:1], [1:i:i:1], [1:-i:-i:1], [1:-i:i:-1], [1:i:-i:-1], \
            [1:-1:i:-i], [1:-1:-i:i], [1:1:i:i], [1:1:-i:-i], [1:0:1:0], [1:0:-1:0]")),
    raw("Sigma12-prime", "§4: \"denote by Σ_12' the subset in P^3 that consists of the 12 points\"",
        Points("[1:1:1:1], [1:-1:-1:1], [1:i:1:-i], [1:-i:1:i], [1:i:-1:i], [1:-i:-1:-i], \
            [1:0:i:0], [1:0:-i:0], [0:i:0:1], [0:-i:0:1], [1:1:-1:-1], [1:-1:1:-1]")),
    raw("Sigma16-reps", "§5: \"exactly four G_80-orbits of length 16\"",
        Points("[(-1+i)*z{5}^3 + (-1+i)*z{5}^2 - z{5} - 1 : 1 + (1+i)*z{5}^2 + z{5} : 1 + (1+i)*z{5}^3 + z{5} : z{5} - 1], \
            [(1+i)*z{5}^3 + (1-i)*z{5}^2 + i*z{5} + 1 : -2*z{5}^3 + (-1-i)*z{5}^2 - z{5} - 2 - i : (-1+i)*z{5}^3 + i*z{5} + i : z{5} - 1], \
            [-2*i*z{5}^3 + (1-i)*z{5}^2 - i*z{5} + 1 - 2*i : (1-i)*z{5}^3 - (1+i)*z{5}^2 + z{5} - i : (1-i)*z{5}^3 - i*z{5} - i : z{5} - 1], \
            [(-1+i)*z{5}^2 + i*z{5} + i : (1+i)*z{5}^3 + (1+i)*z{5}^2 + i*z{5} + i : -1 + (-1-i)*z{5}^3 - z{5} : z{5} - 1]")),
    raw("Table2", "§5: \"Incidence between S_i and Σ_16^j\"",
        Table("orbit | S1 | S2 | S3 | S4;\
            Sigma16^1 | Sing | + | - | +;\
            Sigma16^2 | - | Sing | + | +;\
            Sigma16^3 | + | + | Sing | -;\
            Sigma16^4 | + | - | + | Sing")),
    raw("Section4-table", "§4: \"We summarize the intersections of the curves\"",
        Table("curve | L4^1 | L4^2 | L4^3 | L4^4 | L6^1 | L6^2;\
            L4^1 | L4^1 | empty | Sigma16^1 | Sigma16^2 | empty | Sigma24^1;\
            L4^2 | empty | L4^2 | Sigma16^3 | Sigma16^4 | empty | Sigma24^2;\
            L4^3 | Sigma16^1 | Sigma16^3 | L4^3 | empty | Sigma24^3 | empty;\
            L4^4 | Sigma16^2 | Sigma16^4 | empty | L4^4 | Sigma24^4 | empty;\
            L6^1 | empty | empty | Sigma24^3 | Sigma24^4 | L6^1 | Sigma36;\
            L6^2 | Sigma24^1 | Sigma24^2 | empty | empty | Sigma36 | L6^2")),
    raw("Section4-quadric-curves", "§4 intersections with the quadric: \"S_1\\cap\\mathcal{Q}=\\mathcal{L}_4^2\\cup\\mathcal{L}_4^4\"",
        Table("surface | curves; S1 | L4^2 L4^4; S2 | L4^1 L4^3; S3 | L4^1 L4^4; S4 | L4^2 L4^3")),
    raw("Section4-sigma16-surfaces", "§4 orbits of length 16 on the quartics: \"This is summarized in the following table.\"",
        Table("orbit | S1 | S2 | S3 | S4;\
            Sigma16^1 | - | + | + | +;\
            Sigma16^2 | + | + | + | -;\
            Sigma16^3 | + | + | - | +;\
            Sigma16^4 | + | - | + | +")),
    raw("RH80", "§5 genus lemma: \"2g-2=-160+40a_40+64a_16\"",
        Table("g | 5 | 13 | 17; a16 | 2 | 1 | 3; a40 | 1 | 3 | 0")),
    raw("RH144", "§4 genus lemma: \"2g-2=-288+72a_72+96a_48+120a_24\"",
        Table("g | 8 | 13 | 13; a24 | 0 | 1 | 2; a48 | 0 | 2 | 0; a72 | 3 | 0 | 1")),
    raw("line-restriction", "§5 remark on degree-8 curves: \"μ^4-(4ξ_5^3+4ξ_5^2+2)μ^2+1=0\"",
        Table("surfaces | coefficients of l^4, l^3*m, l^2*m^2, l*m^3, m^4;\
            S1 S4 | 1, 0, -4*z{5}^3 - 4*z{5}^2 - 2, 0, 1;\
            S2 S3 | 1, 0, 4*z{5}^3 + 4*z{5}^2 + 2, 0, 1")),
];
