/**
 * @file golden_gen.cpp
 * @brief One-shot generator for tests/golden/oracle_values.json.
 *
 * Runs the brute-force oracles over a fixed parameter sweep and freezes the
 * results, with provenance metadata, as the golden file the test suite
 * compares against.  Run once and commit the output; never hand-edit it.
 *
 * Usage: golden_gen <output-path>
 */
#include "hilb/module.hpp"

#include <json.hpp>

#include <ctime>
#include <fstream>
#include <iostream>

using json = nlohmann::ordered_json;
using namespace hilb;

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: golden_gen <output-path>\n";
        return 1;
    }
    char datebuf[32];
    std::time_t now = std::time(nullptr);
    std::strftime(datebuf, sizeof datebuf, "%Y-%m-%d", std::gmtime(&now));

    json doc;
    doc["metadata"] = {{"generator", "golden_gen"},
                       {"date", datebuf},
                       {"method", "brute-force oracle enumeration"},
                       {"sweep", "accepted (n,n1,n2,l1,l2): n <= 5, |l1|,|l2| <= 2; k <= 4"}};

    Int budget = default_budget();
    json entries = json::array();
    for (int n = 2; n <= 5; ++n)
        for (int n1 = 1; n1 <= n; ++n1)
            for (int n2 = n1; n2 <= n; ++n2)
                for (long long l1 = -2; l1 <= 2; ++l1)
                    for (long long l2 = -2; l2 <= 2; ++l2) {
                        ModuleParams p{n, n1, n2, l1, l2};
                        ValidationResult val;
                        try {
                            val = validate_params(p);
                        } catch (const invalid_parameters&) {
                            continue;
                        }
                        if (!val.accepted) continue;
                        ModuleParams q = p;
                        GeneratorCase gc = generator_case(p);
                        if (gc == GeneratorCase::SkewReflected) q = reflect_params(p);
                        if (gc == GeneratorCase::Mixed && p.l2 > 0) q = reflect_params(p);
                        json values = json::array();
                        bool ok = true;
                        for (long long k = 0; k <= 4 && ok; ++k) {
                            try {
                                Int v;
                                switch (gc) {
                                    case GeneratorCase::TopBlockFull:
                                        v = oracle_top_block_count(q, k, budget);
                                        break;
                                    case GeneratorCase::EqualBlocks:
                                        v = oracle_equal_blocks_count(q, k, budget);
                                        break;
                                    case GeneratorCase::Mixed:
                                        v = oracle_mixed_count(q, k, budget);
                                        break;
                                    default:  // SkewPositive / SkewReflected
                                        v = oracle_skew_count(q, k, budget);
                                }
                                values.push_back(to_decimal(v));
                            } catch (const budget_exceeded&) {
                                ok = false;
                            }
                        }
                        if (values.empty()) continue;
                        entries.push_back(json{{"n", p.n},
                                               {"n1", p.n1},
                                               {"n2", p.n2},
                                               {"l1", p.l1},
                                               {"l2", p.l2},
                                               {"case", generator_case_name(gc)},
                                               {"values", values}});
                    }
    doc["generator_counts"] = entries;

    std::ofstream out(argv[1]);
    if (!out) {
        std::cerr << "cannot open " << argv[1] << "\n";
        return 1;
    }
    out << doc.dump(1) << "\n";
    std::cout << "wrote " << entries.size() << " entries to " << argv[1] << "\n";
    return 0;
}
