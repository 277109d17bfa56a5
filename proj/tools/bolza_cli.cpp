#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bolza/bolza_model.hpp"
#include "bolza/graph.hpp"
#include "bolza/intersection.hpp"
#include "bolza/render.hpp"
#include "bolza/spectrum.hpp"
#include "bolza/verify.hpp"

using namespace bolza;

namespace {

void write_out(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    f << content;
    if (!f.good()) throw std::runtime_error("write failed: " + path);
}

std::string spectrum_csv(const SpectrumTable& t) {
    std::string s = "length,trace_p,trace_q,mult_total,mult_simple,words\r\n";
    char buf[64];
    for (const SpectrumRow& r : t.rows) {
        std::snprintf(buf, sizeof buf, "%.12f", r.length);
        s += buf;
        s += "," + std::to_string(r.trace.p) + "," + std::to_string(r.trace.q) + "," +
             std::to_string(r.mult_total) + "," + std::to_string(r.mult_simple) + ",\"";
        for (size_t i = 0; i < r.words.size(); ++i) {
            if (i) s += " ";
            s += r.words[i];
        }
        s += "\"\r\n";
    }
    return s;
}

std::string spectrum_json(const SpectrumTable& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (const SpectrumRow& r : t.rows) {
        nlohmann::json row;
        row["length"] = r.length;
        row["trace_p"] = r.trace.p;
        row["trace_q"] = r.trace.q;
        row["mult_total"] = r.mult_total;
        row["mult_simple"] = r.mult_simple;
        row["words"] = r.words;
        rows.push_back(row);
    }
    nlohmann::json j;
    j["rows"] = rows;
    return j.dump(1) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bolza surface geodesics: spectrum, intersections, complexity"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string precision = "double";
    app.add_option("--precision", precision, "double|high")->check(CLI::IsMember({"double", "high"}));
    app.add_option("--jobs", cfg.jobs, "worker threads (0 = auto)");
    app.add_option("--seed", cfg.seed, "seed for randomized property checks");

    auto* sp = app.add_subcommand("spectrum", "length spectrum up to a cutoff");
    double max_length = 5.0;
    sp->add_option("--max-length", max_length, "geodesic length cutoff");
    sp->add_option("--format", cfg.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    sp->add_option("--out", cfg.out_path, "output path (default stdout)");

    auto* cx = app.add_subcommand("complexity", "complexity table T_k");
    cx->add_option("--kmax", cfg.kmax, "largest k (<= 12)");
    cx->add_flag("--certified-only", cfg.certified_only, "exit 2 if any row is uncertified");
    cx->add_option("--out", cfg.out_path, "output path");

    auto* gr = app.add_subcommand("graph", "arrangement graph of a curve system");
    std::string system = "sys";
    gr->add_option("--system", system, "omega1|omega2|sys|second")
        ->check(CLI::IsMember({"omega1", "omega2", "sys", "second"}));
    std::string dot_path;
    gr->add_option("--dot", dot_path, "also write a DOT file of the abstract graph");
    gr->add_option("--out", cfg.out_path, "output path");

    auto* rd = app.add_subcommand("render", "SVG of the disc, tiles and curve systems");
    RenderSpec rspec;
    rd->add_option("--systems", rspec.systems, "omega1 omega2 sys second gamma");
    rd->add_option("--words", rspec.custom_words, "extra curve words to draw");
    rd->add_option("--depth", rspec.tile_depth, "tessellation depth (<= 6)");
    rd->add_option("--size", rspec.size_px, "image size in pixels");
    rd->add_option("--out", cfg.out_path, "output path");

    auto* vf = app.add_subcommand("verify", "run the acceptance suite");
    vf->add_option("--kmax", cfg.kmax, "complexity rows to certify (10 or 11)");
    vf->add_option("--out", cfg.out_path, "write the JSON report here");

    auto* rb = app.add_subcommand("rebuild-certificates", "regenerate the curve-system data file");
    std::string data_path = "data/curve_systems.json";
    rb->add_option("--path", data_path, "data file path");

    CLI11_PARSE(app, argc, argv);
    cfg.precision = precision == "high" ? Precision::High : Precision::Double;
    cfg.tol = tolerances_for(cfg.precision);

    try {
        if (sp->parsed()) {
            EnumerationOptions opt;
            opt.jobs = cfg.jobs;
            SpectrumTable t = length_spectrum(max_length, opt);
            write_out(cfg.out_path, cfg.format == "csv" ? spectrum_csv(t) : spectrum_json(t));
            return 0;
        }
        if (cx->parsed()) {
            EnumerationOptions opt;
            opt.jobs = cfg.jobs;
            auto rows = complexity_table(cfg.kmax, opt);
            nlohmann::json arr = nlohmann::json::array();
            bool uncert = false;
            for (const auto& r : rows) {
                nlohmann::json row;
                row["k"] = r.k;
                row["T_k"] = r.T_k;
                row["certified"] = r.certified;
                row["witnesses"] = r.witnesses;
                arr.push_back(row);
                if (!r.certified) uncert = true;
            }
            write_out(cfg.out_path, nlohmann::json{{"rows", arr}}.dump(1) + "\n");
            return (uncert && cfg.certified_only) ? 2 : 0;
        }
        if (gr->parsed()) {
            const CurveSystem& s = system == "omega1"   ? omega1()
                                   : system == "omega2" ? omega2()
                                   : system == "second" ? second_systoles()
                                                        : systolic_set();
            SurfaceGraph g = build_arrangement(s, cfg.tol);
            FaceCensus fc = face_census(g);
            nlohmann::json j;
            j["V"] = g.V;
            j["E"] = g.E;
            j["F"] = g.F;
            j["euler"] = g.euler();
            j["area"] = g.total_area();
            j["filling"] = is_filling(s, cfg.tol);
            nlohmann::json cen = nlohmann::json::array();
            for (const auto& [sig, count] : fc.signatures) {
                nlohmann::json row;
                row["signature"] = sig;
                row["count"] = count;
                cen.push_back(row);
            }
            j["census"] = cen;
            write_out(cfg.out_path, j.dump(1) + "\n");
            if (!dot_path.empty()) {
                std::string dot = "graph arrangement {\n";
                for (int v = 0; v < g.V; ++v)
                    dot += "  v" + std::to_string(v) + ";\n";
                for (auto [u, v] : g.edge_list)
                    dot += "  v" + std::to_string(u) + " -- v" + std::to_string(v) + ";\n";
                dot += "}\n";
                write_out(dot_path, dot);
            }
            return 0;
        }
        if (rd->parsed()) {
            write_out(cfg.out_path, render_svg(rspec));
            return 0;
        }
        if (vf->parsed()) {
            VerifyReport rep = run_acceptance(cfg, true);
            if (!cfg.out_path.empty()) write_out(cfg.out_path, rep.to_json() + "\n");
            return rep.all_pass() ? 0 : 1;
        }
        if (rb->parsed()) {
            rebuild_certificates(data_path);
            std::fprintf(stderr, "wrote %s\n", data_path.c_str());
            return 0;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
