#include "oasis2/turtle.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace oasis2 {

namespace {

const std::string kRdfType = std::string(kRdfNamespace) + "type";
const std::string kRdfsSubClassOf = std::string(kRdfsNamespace) + "subClassOf";
const std::string kRdfsResource = std::string(kRdfsNamespace) + "Resource";

bool valid_local(std::string_view s) {
    if (s.empty() || s.front() == '-') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') return false;
    return true;
}

// ---------------------------------------------------------------- serializer

struct PrefixTable {
    // namespace -> prefix
    std::map<std::string, std::string> table;

    std::string render(const Iri& iri) const {
        auto ns = iri.namespace_part();
        auto local = iri.local_name();
        if (!ns.empty() && valid_local(local)) {
            auto it = table.find(std::string(ns));
            if (it != table.end()) return it->second + ":" + std::string(local);
        }
        return "<" + iri.value + ">";
    }
};

}  // namespace

std::string serialize(const Graph& g, const SerializeOptions& opts) {
    // subject -> predicate iri ("a" for rdf:type) -> sorted objects
    std::map<Iri, std::map<std::string, std::set<Iri>>> statements;
    std::set<Iri> terms;

    auto add_stmt = [&](const Iri& s, const std::string& pred, const Iri& o) {
        statements[s][pred].insert(o);
        terms.insert(s);
        terms.insert(o);
    };

    for (const auto& [id, info] : g.nodes()) {
        for (const auto& c : info.classes) add_stmt(id, "a", class_iri(c, opts.oasis_ns));
        for (LayerTag t : info.layers)
            add_stmt(id, "a", Iri(opts.oasis_ns + std::string(layer_marker_name(t))));
    }
    for (const auto& t : g.triples()) {
        Iri pred = property_iri(t.property, opts.oasis_ns);
        terms.insert(pred);
        add_stmt(t.subject, pred.value, t.object);
    }
    for (const auto& [sub, super] : g.subclass_edges()) {
        terms.insert(Iri(kRdfsSubClassOf));
        add_stmt(sub, kRdfsSubClassOf, super);
    }
    // a node appearing in no statement would otherwise vanish on round-trip;
    // declare it with the vacuous type rdfs:Resource
    for (const auto& [id, info] : g.nodes())
        if (!terms.count(id)) statements[id]["a"].insert(Iri(kRdfsResource));

    PrefixTable prefixes;
    prefixes.table[opts.oasis_ns] = "oasis";
    prefixes.table[std::string(kRdfNamespace)] = "rdf";
    prefixes.table[std::string(kRdfsNamespace)] = "rdfs";
    std::set<std::string> taken{"oasis", "rdf", "rdfs"};
    for (const auto& [ns, pfx] : opts.prefix_hints) {
        if (!prefixes.table.count(ns) && !taken.count(pfx)) {
            prefixes.table[ns] = pfx;
            taken.insert(pfx);
        }
    }
    std::set<std::string> user_namespaces;
    for (const auto& t : terms) {
        auto ns = t.namespace_part();
        if (!ns.empty() && valid_local(t.local_name()) && !prefixes.table.count(std::string(ns)))
            user_namespaces.insert(std::string(ns));
    }
    int counter = 0;
    for (const auto& ns : user_namespaces) {
        std::string name;
        do {
            name = "ns" + std::to_string(counter++);
        } while (taken.count(name));
        prefixes.table[ns] = name;
        taken.insert(name);
    }

    std::ostringstream out;
    std::vector<std::pair<std::string, std::string>> decls;  // (prefix, ns)
    for (const auto& [ns, pfx] : prefixes.table) decls.emplace_back(pfx, ns);
    std::sort(decls.begin(), decls.end());
    for (const auto& [pfx, ns] : decls) out << "@prefix " << pfx << ": <" << ns << "> .\n";

    for (const auto& [subject, preds] : statements) {
        out << "\n" << prefixes.render(subject);
        // "a" first, then predicates by full IRI; map ordering gives both
        // since "a" sorts before any absolute IRI.
        size_t i = 0;
        for (const auto& [pred, objs] : preds) {
            out << (i == 0 ? " " : "    ");
            out << (pred == "a" ? "a" : prefixes.render(Iri(pred))) << " ";
            size_t j = 0;
            for (const auto& o : objs) {
                if (j++) out << ", ";
                out << prefixes.render(o);
            }
            out << (++i == preds.size() ? " .\n" : " ;\n");
        }
    }
    return out.str();
}

// -------------------------------------------------------------------- parser

namespace {

enum class TokKind { PrefixKw, IriRef, PName, A, Dot, Semicolon, Comma, End };

struct Token {
    TokKind kind = TokKind::End;
    std::string prefix;  // PName
    std::string local;   // PName
    std::string iri;     // IriRef
    int line = 1;
    int column = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_ws();
        Token tok;
        tok.line = line_;
        tok.column = column_;
        if (eof()) return tok;
        char c = peek();
        if (c == '.') {
            get();
            tok.kind = TokKind::Dot;
        } else if (c == ';') {
            get();
            tok.kind = TokKind::Semicolon;
        } else if (c == ',') {
            get();
            tok.kind = TokKind::Comma;
        } else if (c == '<') {
            get();
            std::string iri;
            while (!eof() && peek() != '>' && peek() != '\n') iri.push_back(get());
            if (eof() || peek() != '>') throw SyntaxError(tok.line, tok.column, "unterminated IRI reference");
            get();
            tok.kind = TokKind::IriRef;
            tok.iri = iri;
        } else if (c == '@') {
            std::string word;
            word.push_back(get());
            while (!eof() && std::isalpha(static_cast<unsigned char>(peek()))) word.push_back(get());
            if (word != "@prefix")
                throw SyntaxError(tok.line, tok.column, "unexpected token '" + word + "'");
            tok.kind = TokKind::PrefixKw;
        } else if (is_name_char(c) || c == ':') {
            std::string word;
            while (!eof() && (is_name_char(peek()) || peek() == ':')) word.push_back(get());
            auto colon = word.find(':');
            if (colon == std::string::npos) {
                if (word == "a") {
                    tok.kind = TokKind::A;
                } else {
                    throw SyntaxError(tok.line, tok.column, "unexpected token '" + word + "'");
                }
            } else {
                tok.kind = TokKind::PName;
                tok.prefix = word.substr(0, colon);
                tok.local = word.substr(colon + 1);
                if (tok.local.find(':') != std::string::npos)
                    throw SyntaxError(tok.line, tok.column, "malformed prefixed name '" + word + "'");
            }
        } else {
            std::string bad;
            while (!eof() && !std::isspace(static_cast<unsigned char>(peek()))) bad.push_back(get());
            throw SyntaxError(tok.line, tok.column, "unexpected token '" + bad + "'");
        }
        return tok;
    }

private:
    static bool is_name_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
    }

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    char get() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    void skip_ws() {
        while (!eof()) {
            char c = peek();
            if (c == '#') {
                while (!eof() && peek() != '\n') get();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                get();
            } else {
                break;
            }
        }
    }

    std::string_view text_;
    size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

class Parser {
public:
    Parser(std::string_view text, std::string_view oasis_ns)
        : lexer_(text), oasis_ns_(oasis_ns) {}

    Graph run() {
        advance();
        while (cur_.kind != TokKind::End) {
            if (cur_.kind == TokKind::PrefixKw) {
                parse_prefix();
            } else {
                parse_statement();
            }
        }
        return std::move(graph_);
    }

private:
    void advance() { cur_ = lexer_.next(); }

    void expect(TokKind k, const char* what) {
        if (cur_.kind != k) throw SyntaxError(cur_.line, cur_.column, std::string("expected ") + what);
    }

    void parse_prefix() {
        advance();
        expect(TokKind::PName, "prefix name");
        if (!cur_.local.empty())
            throw SyntaxError(cur_.line, cur_.column, "prefix declaration must end with ':'");
        std::string prefix = cur_.prefix;
        advance();
        expect(TokKind::IriRef, "namespace IRI");
        prefixes_[prefix] = cur_.iri;
        advance();
        expect(TokKind::Dot, "'.'");
        advance();
    }

    Iri term() {
        if (cur_.kind == TokKind::IriRef) {
            Iri iri(cur_.iri);
            advance();
            return iri;
        }
        if (cur_.kind == TokKind::PName) {
            auto it = prefixes_.find(cur_.prefix);
            if (it == prefixes_.end())
                throw SyntaxError(cur_.line, cur_.column, "undeclared prefix '" + cur_.prefix + ":'");
            Iri iri(it->second + cur_.local);
            advance();
            return iri;
        }
        throw SyntaxError(cur_.line, cur_.column, "expected IRI or prefixed name");
    }

    void parse_statement() {
        Token at = cur_;
        Iri subject = term();
        if (!subject.absolute())
            throw SyntaxError(at.line, at.column, "subject IRI is not absolute: " + subject.value);
        while (true) {
            bool is_type = false;
            Iri predicate;
            Token pred_tok = cur_;
            if (cur_.kind == TokKind::A) {
                is_type = true;
                advance();
            } else {
                predicate = term();
                if (predicate.value == kRdfType) is_type = true;
            }
            while (true) {
                Token obj_tok = cur_;
                Iri object = term();
                apply(subject, is_type, predicate, object, pred_tok, obj_tok);
                if (cur_.kind != TokKind::Comma) break;
                advance();
            }
            if (cur_.kind == TokKind::Semicolon) {
                advance();
                if (cur_.kind == TokKind::Dot) break;  // trailing ';'
                continue;
            }
            break;
        }
        expect(TokKind::Dot, "'.'");
        advance();
    }

    void apply(const Iri& subject, bool is_type, const Iri& predicate, const Iri& object,
               const Token& pred_tok, const Token& obj_tok) {
        graph_.add_entity(subject);
        if (is_type) {
            if (object.value == kRdfsResource) return;  // bare node declaration
            if (object.value.starts_with(oasis_ns_)) {
                std::string local(object.value.substr(oasis_ns_.size()));
                if (auto layer = layer_from_marker(local)) {
                    graph_.add_layer_unchecked(subject, *layer);
                    return;
                }
                if (auto core = core_class_from_name(local)) {
                    graph_.add_entity(subject, {*core});
                    return;
                }
            }
            graph_.add_entity(subject, {domain_class(object)});
            return;
        }
        if (predicate.value == kRdfsSubClassOf) {
            graph_.add_entity(object);
            try {
                graph_.add_subclass(subject, object);
            } catch (const SubclassCycleError& e) {
                throw SyntaxError(obj_tok.line, obj_tok.column, e.what());
            }
            return;
        }
        if (!predicate.value.starts_with(oasis_ns_))
            throw UnknownPropertyError("line " + std::to_string(pred_tok.line) + ", column " +
                                       std::to_string(pred_tok.column) +
                                       ": predicate outside the OASIS 2 vocabulary: " +
                                       predicate.value);
        std::string local(predicate.value.substr(oasis_ns_.size()));
        auto prop = property_from_name(local);
        if (!prop)
            throw UnknownPropertyError("line " + std::to_string(pred_tok.line) + ", column " +
                                       std::to_string(pred_tok.column) +
                                       ": unknown or non-assertable property: " + predicate.value);
        graph_.add_entity(object);
        graph_.add_triple(subject, *prop, object);
    }

    Lexer lexer_;
    Token cur_;
    std::string oasis_ns_;
    std::map<std::string, std::string> prefixes_;
    Graph graph_;
};

}  // namespace

Graph parse(std::string_view text, std::string_view oasis_ns) {
    return Parser(text, oasis_ns).run();
}

}  // namespace oasis2
