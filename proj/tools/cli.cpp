#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bolmoufang/classify.hpp"
#include "bolmoufang/constructions.hpp"
#include "bolmoufang/evaluator.hpp"
#include "bolmoufang/loop.hpp"
#include "bolmoufang/model_finder.hpp"
#include "bolmoufang/term.hpp"

namespace bolmoufang::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<Law> parse_laws(const std::vector<std::string>& items) {
    std::vector<Law> out;
    for (const auto& s : items) out.push_back(parse_law(s));
    return out;
}

std::string class_label(IdentityName n) {
    return std::string(long_name(classify_identity(n))) + " class";
}

int cmd_name(const std::string& text, std::ostream& out) {
    IdentityName n = looks_like_name(text) ? parse_name(text) : encode_name(parse_identity(text));
    out << n.str() << " (" << class_label(n) << ")\n";
    return kOk;
}

int cmd_dual(const std::string& text, std::ostream& out) {
    if (looks_like_name(text)) {
        auto d = dual_name(parse_name(text));
        out << d.str() << "  " << decode_name(d).str() << '\n';
    } else {
        auto d = dual_term(parse_identity(text));
        out << encode_name(d).str() << "  " << d.str() << '\n';
    }
    return kOk;
}

int cmd_check(const std::string& file, const std::vector<std::string>& identities,
              const std::vector<std::string>& varieties, bool all, std::ostream& out) {
    auto loop = read_loop_file(file);
    std::vector<Law> laws;
    for (const auto& s : identities) laws.push_back(parse_law(s));
    for (const auto& s : varieties) {
        auto v = parse_variety(s);
        if (!v) throw UsageError("unknown variety '" + s + "'");
        laws.push_back(law(*v));
    }
    if (all || laws.empty()) {
        for (auto n : enumerate_all()) laws.push_back(law(n));
        for (auto v : kAllVarieties) laws.push_back(law(v));
    }
    bool every = true;
    for (const auto& l : laws) {
        if (auto w = counterexample(loop, l)) {
            every = false;
            out << "FAIL " << w->str() << '\n';
        } else {
            out << "pass " << l.label << '\n';
        }
    }
    return every ? kOk : kMismatch;
}

int cmd_profile(const std::string& file, const std::string& format, std::ostream& out) {
    auto loop = read_loop_file(file);
    auto p = profile(loop);
    if (format == "records") {
        nlohmann::json j{{"file", file}, {"order", loop.order()}};
        for (auto n : enumerate_all()) j["identities"][n.str()] = p.holds(n);
        for (auto v : kAllVarieties) j["varieties"][std::string(tag(v))] = p.holds(v);
        out << j.dump() << '\n';
        return kOk;
    }
    out << "order " << loop.order() << '\n';
    for (int pat = 0; pat < 6; ++pat) {
        out << static_cast<char>('A' + pat) << ' ';
        for (int k = 0; k < 10; ++k) {
            auto n = IdentityName::from_index(pat * 10 + k);
            out << ' ' << n.str().substr(1) << (p.holds(n) ? '+' : '-');
        }
        out << '\n';
    }
    out << "varieties";
    for (auto v : kAllVarieties) out << ' ' << tag(v) << (p.holds(v) ? '+' : '-');
    out << '\n';
    return kOk;
}

void print_found(std::ostream& out, const FiniteLoop& loop, const std::vector<Witness>& witnesses) {
    write_loop(out, loop);
    for (const auto& w : witnesses) out << "# " << w.str() << '\n';
}

int cmd_find(int order, int max_order, const std::vector<std::string>& require,
             const std::vector<std::string>& forbid, bool minimal, unsigned threads,
             std::ostream& out, std::ostream& err) {
    auto req = parse_laws(require);
    auto forb = parse_laws(forbid);
    auto mode = minimal ? SearchMode::LexMinimal : SearchMode::FirstFound;
    if (order > 0) {
        auto res = find(SearchSpec{order, req, forb, mode, threads});
        if (auto* f = std::get_if<Found>(&res)) {
            print_found(out, f->loop, f->witnesses);
            return kOk;
        }
        auto& ex = std::get<ExhaustedOrder>(res);
        out << "# no loop of order " << ex.order << " (exhausted, " << ex.nodes << " nodes)\n";
        return kMismatch;
    }
    if (max_order > kDefaultMaxOrder)
        err << "warning: --max-order " << max_order << " beyond " << kDefaultMaxOrder
            << " may run for a very long time\n";
    auto res = find_minimal(req, forb, max_order, mode, threads);
    if (auto* f = std::get_if<FoundAt>(&res)) {
        out << "# smallest order " << f->order << '\n';
        print_found(out, f->loop, f->witnesses);
        return kOk;
    }
    out << "# no loop up to order " << std::get<NoneUpTo>(res).max_order << '\n';
    return kMismatch;
}

int cmd_enumerate(int order, bool count_only, std::ostream& out) {
    std::uint64_t count = enumerate_loops(order, [&](const FiniteLoop& l) {
        if (!count_only) {
            write_loop(out, l);
            out << '\n';
        }
    });
    if (count_only)
        out << count << '\n';
    else
        out << "# " << count << " loops of order " << order << '\n';
    return kOk;
}

int cmd_reproduce(const std::string& what, int max_order, unsigned threads, const std::string& format,
                  const std::string& cache, std::ostream& out) {
    CatalogOptions opts{max_order, threads, std::nullopt};
    if (!cache.empty()) opts.cache_dir = cache;

    std::vector<Report> reports;
    if (what == "examples" || what == "all") reports.push_back(verify_examples());
    if (what == "table2" || what == "all") reports.push_back(verify_table2());
    if (what == "table3" || what == "all") reports.push_back(verify_table3(opts));
    if (what == "figure1" || what == "all") reports.push_back(verify_figure1(opts));

    bool ok = true;
    for (const auto& r : reports) {
        if (format == "records")
            write_records(out, r);
        else
            write_text(out, r);
        ok = ok && r.ok();
    }
    return ok ? kOk : kMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Loops of Bol-Moufang type: identities, evaluation, search and classification"};
    app.require_subcommand(1);

    std::string text, file, format = "text", what, cache;
    std::vector<std::string> identities, varieties, require, forbid;
    bool all = false, minimal = false, count_only = false;
    int order = 0, max_order = 0;
    unsigned threads = 1;

    auto* name = app.add_subcommand("name", "canonical Xij name and variety of an identity");
    name->add_option("identity", text, "e.g. \"x((yy)z)=((xy)y)z\"")->required();

    auto* dual = app.add_subcommand("dual", "dual of an Xij name or an identity");
    dual->add_option("identity", text, "Xij or identity")->required();

    auto* check = app.add_subcommand("check", "evaluate laws on a .loop file");
    check->add_option("file", file)->required();
    check->add_option("--identity", identities, "Xij name or identity")->delimiter(',');
    check->add_option("--variety", varieties, "variety tag, e.g. ML")->delimiter(',');
    check->add_flag("--all", all, "all 60 identities and 15 varieties");

    auto* prof = app.add_subcommand("profile", "60 identity bits and 15 variety bits of a .loop file");
    prof->add_option("file", file)->required();
    prof->add_option("--format", format)->check(CLI::IsMember({"text", "records"}));

    auto* findc = app.add_subcommand("find", "search for a loop satisfying --require and violating --forbid");
    findc->add_option("--order", order, "search this order only")->check(CLI::Range(1, 64));
    findc->add_option("--max-order", max_order, "search orders 1..M (default 16)")->check(CLI::Range(1, 64));
    findc->add_option("--require", require, "comma-separated Xij names, variety tags or identities")
        ->delimiter(',');
    findc->add_option("--forbid", forbid, "comma-separated Xij names, variety tags or identities")
        ->delimiter(',');
    findc->add_flag("--minimal", minimal, "return the lexicographically least table");
    findc->add_option("--threads", threads)->check(CLI::PositiveNumber);

    auto* enumc = app.add_subcommand("enumerate", "list all reduced loop tables of an order");
    enumc->add_option("--order", order)->required()->check(CLI::Range(1, 64));
    enumc->add_flag("--count-only", count_only);

    auto* repro = app.add_subcommand("reproduce", "re-derive the classification tables with certificates");
    repro->add_option("what", what)->required()->check(
        CLI::IsMember({"examples", "table2", "table3", "figure1", "all"}));
    repro->add_option("--max-order", max_order, "catalog order for table3/figure1 (default 6)")
        ->check(CLI::Range(1, 7));
    repro->add_option("--threads", threads)->check(CLI::PositiveNumber);
    repro->add_option("--format", format)->check(CLI::IsMember({"text", "records"}));
    repro->add_option("--cache", cache, "directory for the catalog profile cache");

    std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*name) return cmd_name(text, out);
        if (*dual) return cmd_dual(text, out);
        if (*check) return cmd_check(file, identities, varieties, all, out);
        if (*prof) return cmd_profile(file, format, out);
        if (*findc) {
            if (order > 0 && max_order > 0) throw UsageError("--order and --max-order are exclusive");
            return cmd_find(order, max_order > 0 ? max_order : kDefaultMaxOrder, require, forbid, minimal,
                            threads, out, err);
        }
        if (*enumc) return cmd_enumerate(order, count_only, out);
        if (*repro) return cmd_reproduce(what, max_order > 0 ? max_order : 6, threads, format, cache, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace bolmoufang::cli
