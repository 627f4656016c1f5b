#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "nontrans/acceptance.hpp"
#include "nontrans/dice.hpp"
#include "nontrans/engine.hpp"
#include "nontrans/moments.hpp"
#include "nontrans/verify.hpp"
#include "nontrans/words.hpp"

using nontrans::BigInt;
using nontrans::Rational;
using ordered_json = nlohmann::ordered_json;

namespace {

struct GlobalOpts {
    std::string format = "text";
    std::string output;
    nontrans::EngineCaps caps{};
};

void emit(const GlobalOpts& g, const ordered_json& j, const std::string& text) {
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!g.output.empty()) {
        file.open(g.output);
        if (!file) throw nontrans::DomainError("cannot open output file " + g.output);
        os = &file;
    }
    if (g.format == "json")
        *os << j.dump(2) << "\n";
    else
        *os << text;
}

std::string fraction_str(const Rational& r) { return r.str(); }

ordered_json decks_json(const std::vector<std::vector<int>>& decks) {
    ordered_json a = ordered_json::array();
    for (const auto& d : decks) a.push_back(d);
    return a;
}

std::string decks_text(const std::vector<std::vector<int>>& decks) {
    std::string s = "[";
    for (size_t i = 0; i < decks.size(); ++i) {
        if (i) s += ",";
        s += "[";
        for (size_t j = 0; j < decks[i].size(); ++j) {
            if (j) s += ",";
            s += std::to_string(decks[i][j]);
        }
        s += "]";
    }
    return s + "]";
}

std::string ints_text(const std::vector<int>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "]";
}

std::vector<int> sizes_of(int equal_n, const std::vector<int>& decks) {
    if (equal_n > 0 && !decks.empty())
        throw nontrans::DomainError("--equal and --decks are mutually exclusive");
    if (equal_n > 0) return {equal_n, equal_n, equal_n};
    if (!decks.empty()) return decks;
    throw nontrans::DomainError("one of --equal or --decks is required");
}

int run_count(const GlobalOpts& g, int equal_n, const std::vector<int>& deck_sizes,
              bool dump_poly) {
    std::vector<int> a = sizes_of(equal_n, deck_sizes);
    nontrans::LaurentPoly f = nontrans::compute_F(a, g.caps);
    BigInt count = f.positive_part().eval_all_ones();
    bool equal = std::all_of(a.begin(), a.end(), [&](int v) { return v == a[0]; });
    Rational prob(count, nontrans::multinomial(a));

    ordered_json j;
    j["sizes"] = a;
    j["count"] = count.str();
    std::string text = "sizes=" + ints_text(a) + " count=" + count.str();
    if (equal && a.size() >= 3) {
        BigInt reduced = count / static_cast<int>(a.size());
        if (reduced * static_cast<int>(a.size()) != count)
            throw nontrans::InvariantError("count not divisible by k");
        j["reduced"] = reduced.str();
        text += " reduced=" + reduced.str();
    }
    j["probability"] = {{"fraction", fraction_str(prob)},
                        {"decimal", nontrans::decimal_string(prob, 12)}};
    text += " probability=" + fraction_str(prob) + "~" + nontrans::decimal_string(prob, 12);
    text += "\n";
    if (dump_poly) {
        j["enumerator"] = f.serialize();
        text += f.serialize();
    }
    emit(g, j, text);
    return 0;
}

int run_enumerate(const GlobalOpts& g, int equal_n, const std::vector<int>& deck_sizes,
                  bool reduce) {
    std::vector<int> a = sizes_of(equal_n, deck_sizes);
    auto words = nontrans::enumerate_suckers_words(a, reduce, g.caps);
    ordered_json j;
    j["sizes"] = a;
    j["reduce"] = reduce;
    j["count"] = words.size();
    ordered_json recs = ordered_json::array();
    std::string text;
    for (const auto& w : words) {
        auto decks = nontrans::word_to_decks(w);
        auto s = nontrans::stats(w);
        ordered_json rec;
        rec["word"] = w.str();
        rec["decks"] = decks_json(decks.decks);
        rec["stats"] = s;
        recs.push_back(std::move(rec));
        text += "word=" + w.str() + " decks=" + decks_text(decks.decks) +
                " stats=" + ints_text(s) + "\n";
    }
    j["sets"] = std::move(recs);
    text += "count=" + std::to_string(words.size()) + "\n";
    emit(g, j, text);
    return 0;
}

int run_dice(const GlobalOpts& g, int k, const std::vector<int>& faces, int denoms,
             bool reduce) {
    auto sets = nontrans::enumerate_tieless(k, faces, denoms, reduce, g.caps.max_listed);
    ordered_json j;
    j["k"] = k;
    j["faces"] = faces;
    j["denominations"] = denoms;
    j["reduce"] = reduce;
    j["count"] = sets.size();
    ordered_json recs = ordered_json::array();
    std::string text;
    for (const auto& d : sets) {
        auto rep = nontrans::verify_dice_cycle(d.dice);
        ordered_json rec;
        rec["dice"] = decks_json(d.dice);
        ordered_json margins = ordered_json::array();
        std::string mtext;
        for (const auto& bc : rep.pairs) {
            margins.push_back({bc.wins_a, bc.wins_b, bc.ties});
            mtext += "(" + std::to_string(bc.wins_a) + ":" + std::to_string(bc.wins_b) + ":" +
                     std::to_string(bc.ties) + ")";
        }
        rec["margins"] = std::move(margins);
        recs.push_back(std::move(rec));
        text += "dice=" + decks_text(d.dice) + " margins=" + mtext + "\n";
    }
    j["sets"] = std::move(recs);
    text += "count=" + std::to_string(sets.size()) + "\n";
    emit(g, j, text);
    return 0;
}

int run_moments(const GlobalOpts& g, int n, std::vector<int> order_v, std::vector<int> fit_v,
                int fit_degree, bool limits, int max_order, int table_n) {
    ordered_json j;
    std::string text;
    auto as_order = [](const std::vector<int>& v) {
        if (v.size() != 3) throw nontrans::DomainError("order must have exactly 3 components");
        return nontrans::Order3{v[0], v[1], v[2]};
    };

    int modes = (n > 0 ? 1 : 0) + (!fit_v.empty() ? 1 : 0) + (limits ? 1 : 0) +
                (table_n > 0 ? 1 : 0);
    if (modes != 1)
        throw nontrans::DomainError(
            "pick exactly one of --n (with --order), --fit, --limits, --table");

    if (n > 0) {
        nontrans::Order3 order = as_order(order_v);
        Rational m = nontrans::exact_moment(n, order, g.caps);
        Rational sc = nontrans::scaled_moment(n, order, g.caps);
        j["n"] = n;
        j["order"] = order_v;
        j["moment"] = {{"fraction", fraction_str(m)},
                       {"decimal", nontrans::decimal_string(m, 12)}};
        j["scaled"] = {{"fraction", fraction_str(sc)},
                       {"decimal", nontrans::decimal_string(sc, 12)}};
        text = "n=" + std::to_string(n) + " order=" + ints_text(order_v) +
               " moment=" + fraction_str(m) + "~" + nontrans::decimal_string(m, 12) +
               " scaled=" + fraction_str(sc) + "\n";
    } else if (!fit_v.empty()) {
        nontrans::Order3 order = as_order(fit_v);
        nontrans::MomentPolynomial poly =
            nontrans::fit_moment_polynomial(order, fit_degree, g.caps);
        j["order"] = fit_v;
        j["degree"] = poly.degree();
        ordered_json coeffs = ordered_json::array();
        for (const Rational& c : poly.descending()) coeffs.push_back(fraction_str(c));
        j["coefficients_descending"] = std::move(coeffs);
        j["polynomial"] = poly.str();
        text = "order=" + ints_text(fit_v) + " degree=" + std::to_string(poly.degree()) +
               " polynomial=" + poly.str() + "\n";
    } else if (limits) {
        j["max_order"] = max_order;
        ordered_json rows = ordered_json::array();
        for (int i1 = 0; i1 <= max_order; ++i1)
            for (int i2 = i1; i2 <= max_order; ++i2)
                for (int i3 = i2; i3 <= max_order; ++i3) {
                    if ((i1 + i2 + i3) % 2 != 0) continue;
                    Rational s = nontrans::gaussian_scaled_limit({i1, i2, i3});
                    ordered_json row;
                    row["order"] = std::vector<int>{i1, i2, i3};
                    row["value"] = fraction_str(s);
                    rows.push_back(std::move(row));
                    text += "S(" + std::to_string(i1) + "," + std::to_string(i2) + "," +
                            std::to_string(i3) + ")=" + fraction_str(s) + "\n";
                }
        j["limits"] = std::move(rows);
    } else {
        nontrans::Order3 order = as_order(order_v);
        j["order"] = order_v;
        Rational lim = nontrans::gaussian_scaled_limit(order);
        ordered_json rows = ordered_json::array();
        for (int nn = 1; nn <= table_n; ++nn) {
            Rational sc = nontrans::scaled_moment(nn, order, g.caps);
            ordered_json row;
            row["n"] = nn;
            row["scaled"] = fraction_str(sc);
            row["decimal"] = nontrans::decimal_string(sc, 12);
            rows.push_back(std::move(row));
            text += std::to_string(nn) + "\t" + nontrans::decimal_string(sc, 12) + "\n";
        }
        j["rows"] = std::move(rows);
        j["limit"] = fraction_str(lim);
        text += "limit\t" + nontrans::decimal_string(lim, 12) + "\n";
    }
    emit(g, j, text);
    return 0;
}

int run_verify(const GlobalOpts& g, int max_total) {
    nontrans::VerifyReport rep = nontrans::run_verification(max_total);
    ordered_json j;
    j["max_total"] = max_total;
    j["checks"] = rep.checks;
    j["ok"] = rep.ok;
    j["failures"] = rep.failures;
    std::string text = "checks=" + std::to_string(rep.checks) +
                       " ok=" + (rep.ok ? std::string("true") : std::string("false")) + "\n";
    for (const auto& fline : rep.failures) text += "counterexample: " + fline + "\n";
    emit(g, j, text);
    if (!rep.ok) throw nontrans::InvariantError("verification failed: " + rep.failures.front());
    return 0;
}

int run_repro(const GlobalOpts& g, bool extended) {
    nontrans::AcceptanceOptions opts;
    opts.extended = extended;
    opts.caps = g.caps;
    bool stream_progress = g.format != "json" && g.output.empty();
    auto results = nontrans::run_acceptance(opts, stream_progress ? &std::cout : nullptr);
    bool all = true;
    ordered_json rows = ordered_json::array();
    std::string text;
    for (const auto& r : results) {
        all = all && r.pass;
        ordered_json row;
        row["id"] = r.id;
        row["name"] = r.name;
        row["pass"] = r.pass;
        row["detail"] = r.detail;
        rows.push_back(std::move(row));
        if (!stream_progress) text += nontrans::format_criterion_line(r) + "\n";
    }
    ordered_json j;
    j["extended"] = extended;
    j["criteria"] = std::move(rows);
    j["all_pass"] = all;
    text += all ? "all criteria passed\n" : "some criteria FAILED\n";
    if (!stream_progress)
        emit(g, j, text);
    else
        std::cout << (all ? "all criteria passed" : "some criteria FAILED") << "\n";
    if (!all) throw nontrans::InvariantError("reproduction criteria failed");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    GlobalOpts g;
    if (const char* env = std::getenv("NONTRANS_CAP_TERMS")) {
        try {
            g.caps.max_stored_terms = std::stoll(env);
        } catch (...) {
            std::cerr << "invalid NONTRANS_CAP_TERMS value\n";
            return 2;
        }
    }

    CLI::App app{"exact analysis of nontransitive deck and dice sets"};
    app.require_subcommand(1);
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--output", g.output, "write the report to a file instead of stdout");
    app.add_option("--cap-terms", g.caps.max_stored_terms,
                   "stored-term budget for the table build");
    app.add_option("--cap-listed", g.caps.max_listed, "listing budget");

    int equal_n = 0, dice_k = 4, denoms = 0, verify_total = 9, moments_n = 0, table_n = 0,
        max_order = 5, fit_degree = -1;
    std::vector<int> deck_sizes, faces, order_v, fit_v;
    bool reduce = false, dump_poly = false, extended = false, limits = false;

    CLI::App* c_count = app.add_subcommand("count", "count qualifying deck sets");
    c_count->add_option("--equal", equal_n, "equal deck size n (k = 3)");
    c_count->add_option("--decks", deck_sizes, "deck sizes a1,a2,...")->delimiter(',');
    c_count->add_flag("--dump-poly", dump_poly, "also print the full enumerator");

    CLI::App* c_enum = app.add_subcommand("enumerate", "list qualifying deck sets");
    c_enum->add_option("--equal", equal_n, "equal deck size n (k = 3)");
    c_enum->add_option("--decks", deck_sizes, "deck sizes a1,a2,...")->delimiter(',');
    c_enum->add_flag("--reduce", reduce, "one representative per cyclic orbit");

    CLI::App* c_dice = app.add_subcommand("dice", "enumerate tie-less dice sets");
    c_dice->add_option("--k", dice_k, "number of dice")->capture_default_str();
    c_dice->add_option("--faces", faces, "face counts f1,...,fk")->delimiter(',')->required();
    c_dice->add_option("--denoms", denoms, "number of distinct denominations")->required();
    c_dice->add_flag("--reduce", reduce, "one representative per rotation orbit");

    CLI::App* c_mom = app.add_subcommand("moments", "moment analysis on equal deck triples");
    c_mom->add_option("--n", moments_n, "evaluate at this n");
    c_mom->add_option("--order", order_v, "moment order i1,i2,i3")->delimiter(',');
    c_mom->add_option("--fit", fit_v, "fit the closed form for order i1,i2,i3")->delimiter(',');
    c_mom->add_option("--degree-bound", fit_degree,
                      "degree bound for --fit (default: automatic)");
    c_mom->add_flag("--limits", limits, "print the scaled-limit table");
    c_mom->add_option("--max-order", max_order, "limit-table component bound")
        ->capture_default_str();
    c_mom->add_option("--table", table_n, "scaled-moment convergence table up to this n");

    CLI::App* c_verify = app.add_subcommand("verify", "run the oracle equivalence suite");
    c_verify->add_option("--max-total", verify_total, "letter-count bound")
        ->capture_default_str();

    CLI::App* c_repro = app.add_subcommand("repro", "run every reproduction criterion");
    c_repro->add_flag("--extended", extended, "include the long-running counting tier");

    for (CLI::App* sub : {c_count, c_enum, c_dice, c_mom, c_verify, c_repro})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (c_count->parsed()) return run_count(g, equal_n, deck_sizes, dump_poly);
        if (c_enum->parsed()) return run_enumerate(g, equal_n, deck_sizes, reduce);
        if (c_dice->parsed()) return run_dice(g, dice_k, faces, denoms, reduce);
        if (c_mom->parsed())
            return run_moments(g, moments_n, order_v, fit_v, fit_degree, limits, max_order,
                               table_n);
        if (c_verify->parsed()) return run_verify(g, verify_total);
        if (c_repro->parsed()) return run_repro(g, extended);
    } catch (const nontrans::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nontrans::SizeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const nontrans::PrecisionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const nontrans::InvariantError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
