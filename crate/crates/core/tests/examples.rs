macro_rules! example {
    ($name:ident, $file:literal, $($needle:literal),+) => {
        #[test]
        fn $name() {
            #[path = $file]
            mod example;
            let out = example::run();
            $(assert!(out.contains($needle), "missing {:?} in\n{}", $needle, out);)+
            assert!(!out.contains("pass = false"), "{}", out);
        }
    };
}

example!(
    exact_arithmetic,
    "../examples/exact_arithmetic.rs",
    "x * (1/x) = 1",
    "nullity = 2"
);
example!(
    graded_transpose,
    "../examples/graded_transpose.rs",
    "  + - - +",
    "(AB)^T = -1 B^T A^T"
);
example!(
    build_families,
    "../examples/build_families.rs",
    "formula for (0,0) gives -1, measured 7"
);
example!(
    verify_axioms,
    "../examples/verify_axioms.rs",
    "sl(1,1,1,1): 3720 cases, pass = true"
);
example!(
    structure_constants,
    "../examples/structure_constants.rs",
    "\"basis_size\": 10"
);
example!(
    parafermions,
    "../examples/parafermions.rs",
    "[[f1+, f1-], f1-] = -2 f1-",
    "n=4 q=2: PF cases 128, PFrel cases 256"
);
example!(
    permutations,
    "../examples/permutations.rs",
    "profile [2, 4, 2, 2], pass = true"
);
