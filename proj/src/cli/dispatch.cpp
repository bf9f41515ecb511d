// Copyright 2026 The Treatise Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "treatise/cli/dispatch.hpp"

#include <iostream>

#include <CLI11.hpp>

#include "treatise/catalog/overlay.hpp"
#include "treatise/catalog/sidecar.hpp"
#include "treatise/catalog/validate.hpp"
#include "treatise/cli/cli_config.hpp"
#include "treatise/cli/corpus.hpp"
#include "treatise/common/files.hpp"
#include "treatise/evaluation/evaluate.hpp"
#include "treatise/pipeline/enrich.hpp"
#include "treatise/pipeline/mock_server.hpp"
#include "treatise/pipeline/vocabulary.hpp"
#include "treatise/raster/pgm.hpp"
#include "treatise/retrieval/index.hpp"
#include "treatise/retrieval/query.hpp"

namespace treatise::cli {

namespace fs = std::filesystem;

namespace {

struct Options {
    std::string config;
    std::vector<std::string> in;
    std::string out;
    std::string method;
    std::string glossary;
    std::string ontology;
    std::string manifest;
    std::string index;
    std::string query;
    std::string stage;
    std::string vocabulary;
    std::string terms;
    std::string relief;
    std::string scope = "all";
    std::string fixtures;
    std::string host = "127.0.0.1";
    std::string truth;
    bool expand = false;
    bool force = false;
    bool macro = false;
    bool json = false;
    int hops = 0;
    int hmin = -1;
    int port = 8089;
    std::size_t workers = 0;
    std::size_t top = 10;
    double iou_threshold = 0.5;
};

class Context {
public:
    Context(const Options& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err) {
        if (!o.config.empty()) {
            config_ = load_cli_config(o.config);
        } else {
            pipeline::apply_env_overrides(config_.pipeline);
        }
        auto set_path = [](std::optional<fs::path>& target, const std::string& flag) {
            if (!flag.empty()) target = fs::path(flag);
        };
        set_path(config_.glossary, o.glossary);
        set_path(config_.ontology, o.ontology);
        set_path(config_.manifest, o.manifest);
        set_path(config_.index, o.index);
        set_path(config_.fixtures, o.fixtures);
        auto& p = config_.pipeline;
        set_path(p.vocabulary_path, o.vocabulary);
        set_path(p.term_list_path, o.terms);
        if (!o.method.empty()) p.method = catalog::method_from_string(o.method);
        if (!o.stage.empty()) p.segmentation_stage = pipeline::segmentation_stage_from_string(o.stage);
        if (!o.relief.empty()) p.relief = pipeline::relief_from_string(o.relief);
        if (o.hmin >= 0) p.hmin = o.hmin;
    }

    int segment() {
        const fs::path in = single_input();
        const auto bytes = read_file_bytes(in);
        const auto& p = config_.pipeline;
        auto record = pipeline::segment_native(bytes, in.string(), p.relief, p.hmin);
        record.provenance.timestamp = catalog::utc_timestamp();
        const fs::path dest = o_.out.empty() ? catalog::sidecar_path_for(in) : fs::path(o_.out);
        catalog::write_sidecar(record, dest);
        out_ << dest.string() << '\t' << record.segments.size() << " segments\n";
        return kExitOk;
    }

    int run_pipeline() {
        const auto knowledge = load_knowledge(config_);
        if (o_.in.empty()) {
            if (!config_.manifest) throw Error(ErrorKind::usage, "pipeline needs --in or --manifest");
            const auto manifest = catalog::load_manifest(*config_.manifest);
            config_.pipeline.validate();
            CorpusOptions opts{o_.force, o_.workers, config_.index};
            const auto s = run_corpus(manifest, config_.pipeline, knowledge, opts, err_);
            out_ << "processed=" << s.processed << " failed=" << s.failed << " skipped=" << s.skipped << '\n';
            if (s.backend_failures > 0) return kExitBackend;
            return s.failed > 0 ? kExitData : kExitOk;
        }
        const fs::path in = single_input();
        const fs::path dest = o_.out.empty() ? catalog::sidecar_path_for(in) : fs::path(o_.out);
        if (!o_.force && fs::exists(dest)) {
            out_ << "skipped " << dest.string() << '\n';
            return kExitOk;
        }
        const auto bytes = read_file_bytes(in);
        const auto record = pipeline::run_pipeline(bytes, in.string(), config_.pipeline, knowledge);
        catalog::write_sidecar(record, dest);
        out_ << dest.string() << '\n';
        return kExitOk;
    }

    int vocab() {
        if (!config_.glossary) throw Error(ErrorKind::usage, "vocab needs --glossary");
        const auto& p = config_.pipeline;
        const fs::path dest = !o_.out.empty() ? fs::path(o_.out) : p.vocabulary_path.value_or("vocabulary.json");
        const auto it = p.endpoints.find(pipeline::Stage::define);
        if (it == p.endpoints.end()) throw Error(ErrorKind::usage, "vocab needs a define endpoint");
        const auto glossary = lexicon::load_glossary(*config_.glossary);
        const pipeline::BackendClient definer(pipeline::Stage::define, it->second, p.retry);
        const auto seed = pipeline::build_label_vocabulary(glossary, definer, p.language,
                                                           dest.has_parent_path() ? dest.parent_path() : ".");
        pipeline::save_seed(seed, dest);
        out_ << dest.string() << '\t' << seed.entries.size() << " terms\n";
        return kExitOk;
    }

    int enrich() {
        const fs::path in = single_input();
        const auto knowledge = load_knowledge(config_);
        auto record = catalog::read_sidecar(in);
        pipeline::enrich_record(record, knowledge.glossary, knowledge.ontology, config_.pipeline.language);
        const fs::path dest = o_.out.empty() ? in : fs::path(o_.out);
        catalog::write_sidecar(record, dest);
        out_ << dest.string() << '\n';
        return kExitOk;
    }

    int index() {
        const fs::path dest = index_path();
        std::vector<fs::path> sidecars;
        for (const auto& s : o_.in) sidecars.emplace_back(s);
        if (sidecars.empty() && config_.manifest) {
            for (const auto& t : catalog::load_manifest(*config_.manifest).treatises) {
                for (const auto& image : t.images) {
                    if (fs::exists(catalog::sidecar_path_for(image))) sidecars.push_back(catalog::sidecar_path_for(image));
                }
            }
        }
        if (sidecars.empty()) throw Error(ErrorKind::usage, "index needs --in sidecars or --manifest");
        retrieval::Index idx;
        if (fs::exists(dest)) idx = retrieval::Index::load(dest);
        for (const auto& s : sidecars) idx.index_record(catalog::read_sidecar(s));
        idx.save(dest);
        out_ << dest.string() << '\t' << idx.size() << " documents\n";
        return kExitOk;
    }

    int search() {
        if (o_.query.empty()) throw Error(ErrorKind::usage, "search needs --query");
        if (o_.hops < 0 || o_.hops > 1) throw Error(ErrorKind::usage, "--hops must be 0 or 1");
        const auto idx = retrieval::Index::load(index_path());
        retrieval::Query q = retrieval::parse_query(o_.query);
        if (o_.expand) {
            const auto knowledge = load_knowledge(config_);
            q = retrieval::expand_query(q.raw, knowledge.glossary, knowledge.ontology, o_.hops);
        }
        const auto hits = idx.search(q.expanded, o_.top, retrieval::scope_from_string(o_.scope));
        if (o_.json) {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& h : hits) {
                nlohmann::json j = {{"doc_id", h.doc_id}, {"image_id", h.image_id}, {"score", h.score}};
                if (h.segment_id) j["segment_id"] = *h.segment_id;
                arr.push_back(std::move(j));
            }
            out_ << nlohmann::json{{"terms", q.expanded}, {"hits", arr}}.dump() << '\n';
        } else {
            std::size_t rank = 1;
            for (const auto& h : hits) out_ << rank++ << '\t' << h.doc_id << '\t' << h.score << '\n';
        }
        return kExitOk;
    }

    int eval() {
        if (o_.in.empty()) throw Error(ErrorKind::usage, "eval needs --in images");
        if (!o_.truth.empty() && o_.in.size() != 1) throw Error(ErrorKind::usage, "--truth takes a single --in");
        const auto knowledge = load_knowledge(config_);
        evaluation::ScoreParams params;
        params.iou_threshold = o_.iou_threshold;
        std::vector<evaluation::EvalReport> reports;
        for (const auto& image : o_.in) {
            const fs::path truth = o_.truth.empty() ? catalog::truth_path_for(image) : fs::path(o_.truth);
            const auto pred = catalog::read_sidecar(catalog::sidecar_path_for(image));
            reports.push_back(evaluation::evaluate(pred, evaluation::load_ground_truth(truth), knowledge.glossary,
                                                   knowledge.ontology, params));
        }
        const auto total = evaluation::aggregate(reports, o_.macro ? evaluation::Averaging::macro
                                                                   : evaluation::Averaging::micro);
        if (!o_.out.empty()) write_file_atomic(o_.out, evaluation::reports_to_json(reports, total).dump(2) + "\n");
        out_ << evaluation::render_table(reports, total);
        return kExitOk;
    }

    int overlay() {
        const fs::path in = single_input();
        if (o_.out.empty()) throw Error(ErrorKind::usage, "overlay needs --out");
        const auto grid = raster::decode_pgm(read_file_bytes(in));
        const auto record = catalog::read_sidecar(catalog::sidecar_path_for(in));
        const auto bytes = raster::encode_pgm(catalog::render_overlay(grid, record));
        write_file_atomic(o_.out, std::string(bytes.begin(), bytes.end()));
        out_ << o_.out << '\n';
        return kExitOk;
    }

    int mock_serve() {
        const auto table = config_.fixtures ? pipeline::load_fixture_table(*config_.fixtures) : nlohmann::json::object();
        pipeline::MockServer server(table, config_.pipeline.max_tags);
        err_ << "mock backend on http://" << o_.host << ':' << o_.port << "/v1\n";
        err_.flush();
        server.serve_forever(o_.host, o_.port);
        return kExitOk;
    }

    int validate() {
        if (o_.in.empty()) throw Error(ErrorKind::usage, "validate needs --in sidecars");
        bool ok = true;
        for (const auto& s : o_.in) {
            try {
                const auto record = catalog::read_sidecar(s);
                const auto violations = catalog::validate_record(record);
                for (const auto& v : violations) err_ << s << ": " << v.path << ": " << v.message << '\n';
                if (violations.empty()) out_ << s << "\tok\n";
                ok = ok && violations.empty();
            } catch (const Error& e) {
                if (e.kind() == ErrorKind::usage) throw;
                err_ << s << ": " << e.what() << '\n';
                ok = false;
            }
        }
        return ok ? kExitOk : kExitData;
    }

private:
    fs::path single_input() const {
        if (o_.in.size() != 1) throw Error(ErrorKind::usage, "expected exactly one --in");
        return o_.in.front();
    }

    fs::path index_path() const {
        if (!config_.index) throw Error(ErrorKind::usage, "needs --index");
        return *config_.index;
    }

    const Options& o_;
    std::ostream& out_;
    std::ostream& err_;
    CliConfig config_;
};

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::usage: return kExitUsage;
        case ErrorKind::backend: return kExitBackend;
        case ErrorKind::data:
        case ErrorKind::io: return kExitData;
    }
    return kExitData;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Segment, label, index and evaluate treatise page images.", "treatise"};
    app.require_subcommand(1, 1);
    app.option_defaults()->always_capture_default();
    app.add_option("--config", o.config, "treatise.json configuration file")->check(CLI::ExistingFile);

    auto in = [&](CLI::App* s, const std::string& what) { s->add_option("--in", o.in, what); };
    auto out_opt = [&](CLI::App* s, const std::string& what) { s->add_option("--out", o.out, what); };
    auto knowledge = [&](CLI::App* s) {
        s->add_option("--glossary", o.glossary, "glossary JSON");
        s->add_option("--ontology", o.ontology, "ontology JSON");
    };
    auto native = [&](CLI::App* s) {
        s->add_option("--relief", o.relief, "watershed relief: gradient or raw");
        s->add_option("--hmin", o.hmin, "h-minima depth for markers")->check(CLI::NonNegativeNumber);
    };

    auto* segment = app.add_subcommand("segment", "native watershed segmentation of one PGM image");
    in(segment, "input PGM");
    out_opt(segment, "sidecar path (default <image>.segments.json)");
    native(segment);

    auto* pipe = app.add_subcommand("pipeline", "run a labeling method on one image or a whole manifest");
    in(pipe, "input PGM (omit to process the manifest)");
    out_opt(pipe, "sidecar path for a single image");
    pipe->add_option("--method", o.method, "m1, m2, m3, m4, m4b or native")
        ->check(CLI::IsMember({"m1", "m2", "m3", "m4", "m4b", "native", "M1", "M2", "M3", "M4", "M4b"}));
    pipe->add_option("--manifest", o.manifest, "corpus manifest JSON");
    pipe->add_option("--index", o.index, "index snapshot updated after a corpus run");
    pipe->add_option("--segmentation-stage", o.stage, "before_labeling or after_labeling");
    pipe->add_option("--vocabulary", o.vocabulary, "vocabulary seed JSON (m4, m4b)");
    pipe->add_option("--terms", o.terms, "plaintext term list (m2, m3)");
    pipe->add_flag("--force", o.force, "overwrite existing sidecars");
    pipe->add_option("--workers", o.workers, "worker threads (default: processors)");
    knowledge(pipe);
    native(pipe);

    auto* vocab = app.add_subcommand("vocab", "build the vocabulary seed from the glossary");
    out_opt(vocab, "seed JSON path");
    vocab->add_option("--glossary", o.glossary, "glossary JSON");

    auto* enrich = app.add_subcommand("enrich", "attach concepts and definitions to a sidecar's labels");
    in(enrich, "sidecar JSON");
    out_opt(enrich, "output sidecar (default: in place)");
    knowledge(enrich);

    auto* index = app.add_subcommand("index", "add sidecars to an index snapshot");
    in(index, "sidecar JSON files");
    index->add_option("--index", o.index, "index snapshot");
    index->add_option("--manifest", o.manifest, "index every sidecar of the manifest");

    auto* search = app.add_subcommand("search", "ranked search over an index snapshot");
    search->add_option("--index", o.index, "index snapshot");
    search->add_option("--query", o.query, "query text");
    search->add_flag("--expand", o.expand, "expand the query with glossary and ontology terms");
    search->add_option("--hops", o.hops, "expansion depth, 0 or 1")->check(CLI::Range(0, 1));
    search->add_option("--top", o.top, "number of hits")->check(CLI::PositiveNumber);
    search->add_option("--scope", o.scope, "all, images or segments");
    search->add_flag("--json", o.json, "print JSON");
    knowledge(search);

    auto* eval = app.add_subcommand("eval", "score sidecars against <image>.truth.json");
    in(eval, "image paths");
    out_opt(eval, "JSON report path");
    eval->add_option("--truth", o.truth, "truth sidecar for a single image");
    eval->add_option("--iou-threshold", o.iou_threshold, "match threshold")->check(CLI::Range(0.0, 1.0));
    eval->add_flag("--macro", o.macro, "macro-average across images");
    knowledge(eval);

    auto* overlay = app.add_subcommand("overlay", "draw contours and boxes over an image");
    in(overlay, "input PGM");
    out_opt(overlay, "output PGM");

    auto* mock = app.add_subcommand("mock-serve", "serve the deterministic mock backend");
    mock->add_option("--port", o.port, "TCP port")->check(CLI::Range(1, 65535));
    mock->add_option("--host", o.host, "bind address");
    mock->add_option("--fixtures", o.fixtures, "fixture table JSON");

    auto* validate = app.add_subcommand("validate", "check sidecars against the record schema");
    in(validate, "sidecar JSON files");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        Context ctx(o, out, err);
        if (segment->parsed()) return ctx.segment();
        if (pipe->parsed()) return ctx.run_pipeline();
        if (vocab->parsed()) return ctx.vocab();
        if (enrich->parsed()) return ctx.enrich();
        if (index->parsed()) return ctx.index();
        if (search->parsed()) return ctx.search();
        if (eval->parsed()) return ctx.eval();
        if (overlay->parsed()) return ctx.overlay();
        if (mock->parsed()) return ctx.mock_serve();
        if (validate->parsed()) return ctx.validate();
    } catch (const catalog::ValidationError& e) {
        err << "error: " << e.what() << '\n';
        for (const auto& v : e.violations()) err << "  " << v.path << ": " << v.message << '\n';
        return kExitData;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitData;
    }
    err << app.help();
    return kExitUsage;
}

int dispatch(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return dispatch(args, std::cout, std::cerr);
}

}  // namespace treatise::cli
