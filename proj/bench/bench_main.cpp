// Compares the serial reference kernels against the OpenMP kernels on the
// workloads that dominate aggregation: valuation scans, codomain argmin
// sweeps, and the full-rule profile search.

#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ja/aggregators.hpp"
#include "ja/logic.hpp"
#include "ja/parallel.hpp"

using namespace ja;

namespace {

double now() {
#ifdef _OPENMP
    return omp_get_wtime();
#else
    return static_cast<double>(clock()) / CLOCKS_PER_SEC;
#endif
}

template <class Fn>
double time_best_of(int repeats, Fn&& fn) {
    double best = 1e100;
    for (int i = 0; i < repeats; ++i) {
        double t0 = now();
        fn();
        double t1 = now();
        if (t1 - t0 < best) best = t1 - t0;
    }
    return best;
}

void print_row(const std::string& name, double serial, double parallel) {
    std::printf("%-36s %10.3f ms %10.3f ms %7.2fx\n", name.c_str(), serial * 1e3,
                parallel * 1e3, parallel > 0 ? serial / parallel : 0.0);
}

// A wide random agenda: enough atoms to make the valuation scan visible.
std::vector<Formula> random_clauses(int atoms, int clauses, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Formula> out;
    for (int c = 0; c < clauses; ++c) {
        Formula clause;
        for (int l = 0; l < 3; ++l) {
            Formula lit = Formula::atom("a" + std::to_string(rng() % atoms));
            if (rng() % 2) lit = Formula::negation(lit);
            clause = clause.valid() ? Formula::binary(Formula::Kind::Or, clause, lit) : lit;
        }
        out.push_back(clause);
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    int atom_count = argc > 1 ? std::atoi(argv[1]) : 20;
    Limits limits;
    limits.max_atoms = atom_count;

    std::printf("%-36s %13s %13s %8s\n", "workload", "serial", "openmp", "speedup");

    {
        auto clauses = random_clauses(atom_count, 40, 7);
        AtomUniverse universe(atoms(std::span<const Formula>(clauses)));
        auto compiled = compile_all(clauses, universe);
        auto satisfies = [&](std::uint64_t v) {
            for (const auto& c : compiled)
                if (!c.eval(v)) return false;
            return true;
        };
        std::uint64_t space = universe.valuation_count();

        double serial = time_best_of(3, [&] { (void)par::serial::any_of(space, satisfies); });
        par::set_threads(0); // re-read from environment below
        par::init_from_env();
        double parallel = time_best_of(3, [&] { (void)par::any_of(space, satisfies); });
        print_row("satisfiability scan (" + std::to_string(atom_count) + " atoms)", serial, parallel);

        double serial_f =
            time_best_of(3, [&] { (void)par::serial::filter_indices(space, satisfies); });
        double parallel_f =
            time_best_of(3, [&] { (void)par::filter_indices(space, satisfies); });
        print_row("model enumeration", serial_f, parallel_f);
    }

    {
        // Median-rule sweep over a large codomain: independent atoms.
        std::vector<Formula> pre;
        for (int i = 0; i < 16; ++i) pre.push_back(Formula::atom("a" + std::to_string(i)));
        Limits wide;
        wide.max_issues = 16;
        Agenda agenda = Agenda::make(pre, {}, wide);
        std::mt19937_64 rng(3);
        std::vector<JudgmentSet> agents;
        for (int i = 0; i < 9; ++i)
            agents.push_back(agenda.set_from_mask(static_cast<std::uint32_t>(rng() & 0xffff)));
        Profile p = Profile::make(agenda, agents, ProfileMode::Strict, wide);

        par::set_threads(1);
        double serial = time_best_of(3, [&] { (void)rule_med(p); });
        par::init_from_env();
        double parallel = time_best_of(3, [&] { (void)rule_med(p); });
        print_row("median rule, 65536 candidates", serial, parallel);
    }

    {
        // Full-rule search over |codomain|^n repaired profiles.
        std::vector<Formula> pre;
        for (int i = 0; i < 4; ++i) pre.push_back(Formula::atom("a" + std::to_string(i)));
        Agenda agenda = Agenda::make(pre, {}, limits);
        std::vector<JudgmentSet> agents{
            agenda.set_from_mask(0b0011), agenda.set_from_mask(0b1100),
            agenda.set_from_mask(0b0101), agenda.set_from_mask(0b1010),
            agenda.set_from_mask(0b0110)};
        Profile p = Profile::make(agenda, agents, ProfileMode::Strict, limits);

        par::set_threads(1);
        double serial = time_best_of(3, [&] {
            (void)rule_full(p, Distance::Hamming, Norm::Sum,
                            RuleSpec::IdealClass::MajorityConsistent, limits);
        });
        par::init_from_env();
        double parallel = time_best_of(3, [&] {
            (void)rule_full(p, Distance::Hamming, Norm::Sum,
                            RuleSpec::IdealClass::MajorityConsistent, limits);
        });
        print_row("full rule, 16^5 profiles", serial, parallel);
    }

    return 0;
}
