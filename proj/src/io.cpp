#include "agr/io.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "agr/classify.hpp"
#include "agr/veronese.hpp"

namespace agr {

using nlohmann::json;

namespace {

json tri_to_json(TriState t) {
    switch (t) {
        case TriState::True: return true;
        case TriState::False: return false;
        default: return "unknown";
    }
}

TriState tri_from_json(const json& j) {
    if (j.is_boolean()) return j.get<bool>() ? TriState::True : TriState::False;
    if (j.is_string() && j.get<std::string>() == "unknown") return TriState::Unknown;
    throw input_error("report json: bad tri-state value");
}

json report_json(const ClassificationReport& r) {
    json j;
    j["kind"] = to_string(r.kind);
    j["input"] = r.input;
    j["krull_dim"] = r.krull_dim;
    j["multiplicity"] = r.multiplicity;
    j["embedding_dim"] = r.embedding_dim;
    j["cohen_macaulay"] = tri_to_json(r.cohen_macaulay);
    j["gorenstein"] = tri_to_json(r.gorenstein);
    j["almost_gorenstein"] = tri_to_json(r.almost_gorenstein);
    j["pseudo_gorenstein"] = tri_to_json(r.pseudo_gorenstein);
    j["level"] = tri_to_json(r.level);
    j["cm_type"] = r.cm_type ? json(*r.cm_type) : json(nullptr);
    j["a_invariant"] = r.a_invariant ? json(*r.a_invariant) : json(nullptr);
    j["notes"] = r.notes;
    return j;
}

ClassificationReport report_from(const json& j) {
    ClassificationReport r;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "semigroup-ring") r.kind = RingClass::SemigroupRing;
    else if (kind == "stanley-reisner") r.kind = RingClass::StanleyReisner;
    else if (kind == "veronese") r.kind = RingClass::Veronese;
    else throw input_error("report json: unknown kind " + kind);
    r.input = j.at("input").get<std::string>();
    r.krull_dim = j.at("krull_dim").get<Int>();
    r.multiplicity = j.at("multiplicity").get<Int>();
    r.embedding_dim = j.at("embedding_dim").get<Int>();
    r.cohen_macaulay = tri_from_json(j.at("cohen_macaulay"));
    r.gorenstein = tri_from_json(j.at("gorenstein"));
    r.almost_gorenstein = tri_from_json(j.at("almost_gorenstein"));
    r.pseudo_gorenstein = tri_from_json(j.at("pseudo_gorenstein"));
    r.level = tri_from_json(j.at("level"));
    if (!j.at("cm_type").is_null()) r.cm_type = j.at("cm_type").get<Int>();
    if (!j.at("a_invariant").is_null()) r.a_invariant = j.at("a_invariant").get<Int>();
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

Int parse_int(const std::string& s) {
    size_t pos = 0;
    Int v;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw input_error("not an integer: '" + s + "'");
    }
    if (pos != s.size()) throw input_error("not an integer: '" + s + "'");
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string gens_to_csv(const NumericalSemigroup& h) {
    std::string s;
    for (Int g : h.generators()) {
        if (!s.empty()) s += ',';
        s += std::to_string(g);
    }
    return s;
}

json gens_array(const NumericalSemigroup& h) {
    return json(h.generators());
}

} // namespace

std::string report_to_json(const ClassificationReport& r) {
    return report_json(r).dump(2);
}

ClassificationReport report_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw input_error(std::string("report json: ") + e.what());
    }
    try {
        return report_from(j);
    } catch (const json::exception& e) {
        throw input_error(std::string("report json: ") + e.what());
    }
}

std::string report_to_table(const ClassificationReport& r) {
    std::ostringstream os;
    auto row = [&](const char* key, const std::string& value) {
        os << key << std::string(19 - std::string(key).size(), ' ') << value << "\n";
    };
    row("kind:", to_string(r.kind));
    row("input:", r.input);
    row("krull_dim:", std::to_string(r.krull_dim));
    row("multiplicity:", std::to_string(r.multiplicity));
    row("embedding_dim:", std::to_string(r.embedding_dim));
    row("cohen_macaulay:", to_string(r.cohen_macaulay));
    row("gorenstein:", to_string(r.gorenstein));
    row("almost_gorenstein:", to_string(r.almost_gorenstein));
    row("pseudo_gorenstein:", to_string(r.pseudo_gorenstein));
    row("level:", to_string(r.level));
    row("cm_type:", r.cm_type ? std::to_string(*r.cm_type) : "-");
    row("a_invariant:", r.a_invariant ? std::to_string(*r.a_invariant) : "-");
    os << "notes:\n";
    for (const auto& n : r.notes) os << "  - " << n << "\n";
    return os.str();
}

std::vector<Int> parse_generator_list(const std::string& text) {
    std::vector<Int> out;
    for (const auto& piece : split(text, ',')) {
        auto p = trim(piece);
        if (p.empty()) throw input_error("generator list: empty entry in '" + text + "'");
        out.push_back(parse_int(p));
    }
    if (out.empty()) throw input_error("generator list: no entries");
    return out;
}

std::pair<Int, Int> parse_veronese_params(const std::string& text) {
    auto pieces = split(text, ',');
    if (pieces.size() != 2) throw input_error("veronese payload must be d=<int>,n=<int>");
    auto strip_key = [](std::string s, const char* key) {
        s = trim(s);
        if (s.rfind(key, 0) == 0) s = s.substr(std::string(key).size());
        return trim(s);
    };
    Int d = parse_int(strip_key(pieces[0], "d="));
    Int n = parse_int(strip_key(pieces[1], "n="));
    return {d, n};
}

Field parse_field(const std::string& text) {
    auto t = trim(text);
    if (t == "q" || t == "Q") return Field::rationals();
    if (t.rfind("p:", 0) == 0) return Field::prime(static_cast<int>(parse_int(t.substr(2))));
    throw input_error("field must be 'q' or 'p:<prime>', got '" + text + "'");
}

SimplicialComplex parse_complex_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    std::vector<std::vector<int>> facets;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (n < 0) {
            if (line.rfind("n=", 0) != 0) throw input_error("complex file: first line must be n=<int>");
            n = static_cast<int>(parse_int(trim(line.substr(2))));
            continue;
        }
        std::istringstream ls(line);
        std::vector<int> facet;
        std::string tok;
        while (ls >> tok) facet.push_back(static_cast<int>(parse_int(tok)));
        facets.push_back(std::move(facet));
    }
    if (n < 0) throw input_error("complex file: missing n=<int> header");
    return SimplicialComplex::from_facets(n, facets);
}

SimplicialComplex load_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open complex file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_complex_text(buf.str());
}

std::vector<BatchEntry> parse_manifest(std::istream& in) {
    std::vector<BatchEntry> entries;
    std::set<std::string> labels;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty() || trim(line)[0] == '#') continue;
        auto parts = split(line, '\t');
        if (parts.size() != 3)
            throw input_error("manifest line " + std::to_string(lineno) + ": expected kind<TAB>label<TAB>payload");
        BatchEntry e{trim(parts[0]), trim(parts[1]), trim(parts[2])};
        if (e.kind != "sgp" && e.kind != "complex" && e.kind != "veronese")
            throw input_error("manifest line " + std::to_string(lineno) + ": unknown kind '" + e.kind + "'");
        if (e.label.empty() || !labels.insert(e.label).second)
            throw input_error("manifest line " + std::to_string(lineno) + ": duplicate or empty label");
        // fail-fast syntax validation before anything runs
        if (e.kind == "sgp") {
            parse_generator_list(e.payload);
        } else if (e.kind == "veronese") {
            parse_veronese_params(e.payload);
        } else {
            std::ifstream f(e.payload);
            if (!f) throw input_error("manifest line " + std::to_string(lineno) + ": cannot open " + e.payload);
        }
        entries.push_back(std::move(e));
    }
    return entries;
}

std::vector<BatchResult> run_batch(const std::vector<BatchEntry>& entries, int workers, const Field& field) {
    std::vector<BatchResult> results(entries.size());
    std::atomic<size_t> next{0};
    std::atomic<bool> internal_failure{false};
    std::string internal_message;
    std::mutex internal_mutex;

    auto work = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= entries.size() || internal_failure.load()) break;
            const auto& e = entries[i];
            BatchResult r;
            r.label = e.label;
            try {
                if (e.kind == "sgp") {
                    auto h = NumericalSemigroup::from_generators(parse_generator_list(e.payload));
                    r.report = classify_local(h);
                } else if (e.kind == "veronese") {
                    auto [d, n] = parse_veronese_params(e.payload);
                    r.report = classify_veronese({d, n});
                } else {
                    r.report = classify_sr(load_complex_file(e.payload), field);
                }
                r.status = "ok";
            } catch (const internal_error& ex) {
                std::lock_guard<std::mutex> lock(internal_mutex);
                internal_failure = true;
                internal_message = ex.what();
                break;
            } catch (const input_error& ex) {
                r.status = "error";
                r.message = ex.what();
            }
            results[i] = std::move(r);
        }
    };

    const int nthreads = std::max(1, workers);
    if (nthreads == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    if (internal_failure) throw internal_error(internal_message);
    return results;
}

std::string batch_to_json(const std::vector<BatchResult>& results) {
    json out;
    out["entries"] = json::array();
    for (const auto& r : results) {
        json e;
        e["label"] = r.label;
        e["status"] = r.status;
        if (r.report) e["report"] = report_json(*r.report);
        if (!r.message.empty()) e["message"] = r.message;
        out["entries"].push_back(std::move(e));
    }
    int ok = 0, errors = 0, gor = 0, ag_only = 0, not_ag = 0, unknown = 0;
    for (const auto& r : results) {
        if (r.status != "ok") { ++errors; continue; }
        ++ok;
        if (r.report->gorenstein == TriState::True) ++gor;
        else if (r.report->almost_gorenstein == TriState::True) ++ag_only;
        else if (r.report->almost_gorenstein == TriState::False) ++not_ag;
        else ++unknown;
    }
    out["summary"] = {{"total", results.size()}, {"ok", ok},        {"error", errors},
                      {"gorenstein", gor},       {"almost_gorenstein_only", ag_only},
                      {"not_almost_gorenstein", not_ag}, {"unknown", unknown}};
    return out.dump(2);
}

std::string batch_summary(const std::vector<BatchResult>& results) {
    int errors = 0, gor = 0, ag_only = 0, not_ag = 0, unknown = 0;
    for (const auto& r : results) {
        if (r.status != "ok") { ++errors; continue; }
        if (r.report->gorenstein == TriState::True) ++gor;
        else if (r.report->almost_gorenstein == TriState::True) ++ag_only;
        else if (r.report->almost_gorenstein == TriState::False) ++not_ag;
        else ++unknown;
    }
    std::ostringstream os;
    os << results.size() << " entries: " << gor << " gorenstein, " << ag_only
       << " almost-gorenstein-only, " << not_ag << " not-almost-gorenstein, " << unknown
       << " unknown, " << errors << " errors";
    return os.str();
}

int guarded_cli(const std::function<int()>& body, std::ostream& err) {
    try {
        return body();
    } catch (const internal_error& e) {
        err << "internal inconsistency: " << e.what() << "\n";
        return 2;
    } catch (const input_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

namespace {

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"agr: exact Gorenstein / almost-Gorenstein classification toolkit"};
    app.require_subcommand(1);

    bool as_json = false;

    auto* sgp = app.add_subcommand("sgp", "numerical semigroup rings k[[t^H]]");
    sgp->require_subcommand(1);
    std::string gens_text;
    int max_n = 12;

    auto* sgp_classify = sgp->add_subcommand("classify", "Gorenstein / almost-Gorenstein verdict");
    sgp_classify->add_option("--gens", gens_text, "comma-separated generators, e.g. 3,4,5")->required();
    sgp_classify->add_flag("--json", as_json, "emit JSON");

    auto* sgp_over = sgp->add_subcommand("over", "list all oversemigroups");
    sgp_over->add_option("--gens", gens_text)->required();
    sgp_over->add_flag("--json", as_json);

    auto* sgp_chain = sgp->add_subcommand("chain", "oversemigroup chain, when totally ordered");
    sgp_chain->add_option("--gens", gens_text)->required();
    sgp_chain->add_flag("--json", as_json);

    auto* sgp_hilbert = sgp->add_subcommand("hilbert", "e0, e1 and reduction number of the shifted canonical ideal");
    sgp_hilbert->add_option("--gens", gens_text)->required();
    sgp_hilbert->add_option("--max-n", max_n, "power window (default 12)");
    sgp_hilbert->add_flag("--json", as_json);

    auto* sr = app.add_subcommand("sr", "Stanley-Reisner rings k[Delta]");
    sr->require_subcommand(1);
    std::string file, field_text = "q";
    auto* sr_classify = sr->add_subcommand("classify", "Reisner + graded almost-Gorenstein verdict");
    sr_classify->add_option("--file", file, "complex file (n=<int> header, one facet per line)")->required();
    sr_classify->add_option("--field", field_text, "q or p:<prime> (default q)");
    sr_classify->add_flag("--json", as_json);

    auto* ver = app.add_subcommand("veronese", "Veronese subrings of polynomial rings");
    ver->require_subcommand(1);
    Int vd = 0, vn = 0;
    auto* ver_classify = ver->add_subcommand("classify", "closed form cross-checked by the Hilbert engine");
    ver_classify->add_option("-d", vd, "number of variables")->required();
    ver_classify->add_option("-n", vn, "Veronese order")->required();
    ver_classify->add_flag("--json", as_json);

    auto* batch = app.add_subcommand("batch", "run a manifest of inputs");
    std::string manifest;
    int workers = 1;
    batch->add_option("--manifest", manifest, "kind<TAB>label<TAB>payload, one entry per line")->required();
    batch->add_option("--workers", workers, "parallel workers (default 1)");
    batch->add_option("--field", field_text, "field for complex entries");
    batch->add_flag("--json", as_json);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return 1;
    }

    if (sgp_classify->parsed()) {
        auto r = classify_local(NumericalSemigroup::from_generators(parse_generator_list(gens_text)));
        out << (as_json ? report_to_json(r) + "\n" : report_to_table(r));
        return 0;
    }
    if (sgp_over->parsed()) {
        auto over = oversemigroups(NumericalSemigroup::from_generators(parse_generator_list(gens_text)));
        if (as_json) {
            json j;
            j["count"] = over.size();
            j["oversemigroups"] = json::array();
            for (const auto& s : over) j["oversemigroups"].push_back(gens_array(s));
            out << j.dump(2) << "\n";
        } else {
            out << over.size() << " oversemigroups\n";
            for (const auto& s : over)
                out << "  <" << gens_to_csv(s) << ">  genus=" << s.genus() << " frobenius=" << s.frobenius() << "\n";
        }
        return 0;
    }
    if (sgp_chain->parsed()) {
        auto res = oversemigroup_chain(NumericalSemigroup::from_generators(parse_generator_list(gens_text)));
        if (as_json) {
            json j;
            j["is_chain"] = res.is_chain;
            if (res.is_chain) {
                j["chain"] = json::array();
                for (const auto& s : res.chain) j["chain"].push_back(gens_array(s));
            } else {
                j["incomparable"] = {gens_array(res.incomparable->first), gens_array(res.incomparable->second)};
            }
            out << j.dump(2) << "\n";
        } else if (res.is_chain) {
            out << "chain of length " << res.chain.size() << "\n";
            for (const auto& s : res.chain) out << "  <" << gens_to_csv(s) << ">\n";
        } else {
            out << "not a chain; incomparable pair: <" << gens_to_csv(res.incomparable->first) << "> and <"
                << gens_to_csv(res.incomparable->second) << ">\n";
        }
        return 0;
    }
    if (sgp_hilbert->parsed()) {
        auto h = NumericalSemigroup::from_generators(parse_generator_list(gens_text));
        auto [ideal, shift] = canonical_ideal_shifted(h);
        auto s = hilbert_coeffs(h, ideal, max_n);
        if (as_json) {
            json j;
            j["e0"] = s.e0;
            j["e1"] = s.e1;
            j["reduction_number"] = s.reduction_number;
            j["shift"] = shift;
            j["ideal"] = ideal.generators();
            j["colengths"] = s.colengths;
            out << j.dump(2) << "\n";
        } else {
            out << "shifted canonical ideal <";
            for (size_t i = 0; i < ideal.generators().size(); ++i)
                out << (i ? "," : "") << ideal.generators()[i];
            out << "> (shift " << shift << ")\n";
            out << "e0=" << s.e0 << " e1=" << s.e1 << " reduction_number=" << s.reduction_number << "\n";
        }
        return 0;
    }
    if (sr_classify->parsed()) {
        auto r = classify_sr(load_complex_file(file), parse_field(field_text));
        out << (as_json ? report_to_json(r) + "\n" : report_to_table(r));
        return 0;
    }
    if (ver_classify->parsed()) {
        auto r = classify_veronese({vd, vn});
        out << (as_json ? report_to_json(r) + "\n" : report_to_table(r));
        return 0;
    }
    if (batch->parsed()) {
        std::ifstream in(manifest);
        if (!in) throw input_error("cannot open manifest: " + manifest);
        auto entries = parse_manifest(in);
        auto results = run_batch(entries, workers, parse_field(field_text));
        if (as_json) {
            out << batch_to_json(results) << "\n";
        } else {
            for (const auto& r : results) {
                if (r.status == "ok") {
                    const auto& rep = *r.report;
                    out << r.label << ": gorenstein=" << to_string(rep.gorenstein)
                        << " almost_gorenstein=" << to_string(rep.almost_gorenstein);
                    if (rep.cm_type) out << " type=" << *rep.cm_type;
                    out << "\n";
                } else {
                    out << r.label << ": error: " << r.message << "\n";
                }
            }
            out << batch_summary(results) << "\n";
        }
        return 0;
    }
    err << app.help();
    return 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    return guarded_cli([&] { return dispatch(args, out, err); }, err);
}

} // namespace agr
