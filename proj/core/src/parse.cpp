#include "structmap/parse.hpp"

#include <cctype>
#include <string>
#include <utility>
#include <vector>

namespace structmap {

namespace {

// Thrown internally by the parser; converted to a ParseError at the API
// boundary so parse_catalog stays total.
struct ParseFailure {
    SourcePos pos;
    std::string message;
};

enum class TokenKind { Word, String, LBrace, RBrace, Comma, End };

struct Token {
    TokenKind kind = TokenKind::End;
    std::string text;  // decoded content for String, raw spelling for Word
    SourcePos pos;
};

bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) != 0;
}

bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool is_valid_ident(const std::string& text) {
    if (text.empty() || !is_ident_start(text[0])) return false;
    for (char c : text) {
        if (!is_ident_char(c)) return false;
    }
    return true;
}

/// Whitespace-separated tokens; `{`, `}`, `,` and quoted strings are
/// self-delimiting; `#` starts a comment running to end of line.
class Lexer {
public:
    explicit Lexer(const std::string& source) : src_(source) {}

    Token next() {
        skip_blank();
        Token tok;
        tok.pos = pos();
        if (at_end()) {
            tok.kind = TokenKind::End;
            return tok;
        }
        char c = src_[i_];
        if (c == '{') {
            advance();
            tok.kind = TokenKind::LBrace;
            tok.text = "{";
            return tok;
        }
        if (c == '}') {
            advance();
            tok.kind = TokenKind::RBrace;
            tok.text = "}";
            return tok;
        }
        if (c == ',') {
            advance();
            tok.kind = TokenKind::Comma;
            tok.text = ",";
            return tok;
        }
        if (c == '"') {
            tok.kind = TokenKind::String;
            tok.text = scan_string(tok.pos);
            return tok;
        }
        tok.kind = TokenKind::Word;
        while (!at_end()) {
            char w = src_[i_];
            if (std::isspace(static_cast<unsigned char>(w)) || w == '"' || w == '{' ||
                w == '}' || w == ',' || w == '#') {
                break;
            }
            tok.text.push_back(w);
            advance();
        }
        return tok;
    }

private:
    bool at_end() const { return i_ >= src_.size(); }

    SourcePos pos() const { return {line_, col_}; }

    void advance() {
        if (src_[i_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++i_;
    }

    void skip_blank() {
        while (!at_end()) {
            char c = src_[i_];
            if (c == '#') {
                while (!at_end() && src_[i_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    // Escapes: \" is a quote, \\ is a backslash; any other backslash stands
    // for itself. The opening quote has been seen but not consumed.
    std::string scan_string(SourcePos start) {
        advance();  // opening quote
        std::string out;
        while (true) {
            if (at_end()) {
                throw ParseFailure{start, "unterminated string"};
            }
            char c = src_[i_];
            if (c == '"') {
                advance();
                return out;
            }
            if (c == '\\' && i_ + 1 < src_.size() &&
                (src_[i_ + 1] == '"' || src_[i_ + 1] == '\\')) {
                advance();
                out.push_back(src_[i_]);
                advance();
                continue;
            }
            out.push_back(c);
            advance();
        }
    }

    const std::string& src_;
    std::size_t i_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    explicit Parser(const std::string& source) : lexer_(source) {
        cur_ = lexer_.next();
    }

    Catalog parse() {
        Catalog catalog;
        while (cur_.kind != TokenKind::End) {
            if (cur_.kind == TokenKind::Word && cur_.text == "section") {
                catalog.sections.push_back(parse_section());
            } else if (cur_.kind == TokenKind::Word && cur_.text == "structure") {
                catalog.structures.push_back(parse_structure());
            } else {
                fail("expected 'section' or 'structure'");
            }
        }
        return catalog;
    }

private:
    void bump() { cur_ = lexer_.next(); }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseFailure{cur_.pos, message};
    }

    bool at_word(const char* text) const {
        return cur_.kind == TokenKind::Word && cur_.text == text;
    }

    std::string expect_ident(const char* what) {
        if (cur_.kind != TokenKind::Word || !is_valid_ident(cur_.text)) {
            fail(std::string("expected ") + what);
        }
        std::string id = cur_.text;
        bump();
        return id;
    }

    Token expect_string(const char* what) {
        if (cur_.kind != TokenKind::String) {
            fail(std::string("expected ") + what);
        }
        Token tok = cur_;
        bump();
        return tok;
    }

    void expect_word(const char* text) {
        if (!at_word(text)) {
            fail(std::string("expected '") + text + "'");
        }
        bump();
    }

    SectionDecl parse_section() {
        SectionDecl decl;
        decl.pos = cur_.pos;
        bump();  // "section"
        decl.id = expect_ident("section identifier");
        expect_word("color");
        Token color = expect_string("color string");
        auto rgb = RgbColor::parse(color.text);
        if (!rgb) {
            throw ParseFailure{color.pos, "invalid color \"" + color.text +
                                              "\", expected \"#RRGGBB\""};
        }
        decl.color = *rgb;
        if (at_word("merge-with")) {
            bump();
            decl.merge_with = expect_ident("section identifier after 'merge-with'");
        }
        return decl;
    }

    StructureDef parse_structure() {
        StructureDef def;
        def.pos = cur_.pos;
        bump();  // "structure"
        def.name = expect_string("structure name string").text;
        expect_word("in");
        def.sections.push_back(expect_ident("section identifier"));
        while (cur_.kind == TokenKind::Comma) {
            bump();
            def.sections.push_back(expect_ident("section identifier"));
        }
        if (cur_.kind != TokenKind::LBrace) {
            fail("expected '{'");
        }
        bump();
        while (cur_.kind != TokenKind::RBrace) {
            if (cur_.kind == TokenKind::End) {
                fail("expected '}' before end of input");
            }
            parse_field(def);
        }
        bump();  // '}'
        return def;
    }

    void parse_field(StructureDef& def) {
        if (at_word("types:")) {
            bump();
            parse_ref_list(def.types);
        } else if (at_word("functions:")) {
            bump();
            parse_string_list(def.functions);
        } else if (at_word("relations:")) {
            bump();
            parse_string_list(def.relations);
        } else if (at_word("properties:")) {
            bump();
            parse_string_list(def.properties);
        } else if (at_word("wikipedia:")) {
            bump();
            def.wikipedia = expect_string("URL string").text;
        } else if (at_word("representative")) {
            bump();
            def.representative = true;
        } else {
            fail("expected a field ('types:', 'functions:', 'relations:', "
                 "'properties:', 'wikipedia:', 'representative') or '}'");
        }
    }

    void parse_ref_list(std::vector<ExtensionRef>& out) {
        out.push_back(parse_ref());
        while (cur_.kind == TokenKind::Comma) {
            bump();
            out.push_back(parse_ref());
        }
    }

    ExtensionRef parse_ref() {
        ExtensionRef ref;
        Token target = expect_string("reference target string");
        ref.target = target.text;
        ref.pos = target.pos;
        if (ref.target.empty()) {
            throw ParseFailure{target.pos, "reference target must not be empty"};
        }
        if (at_word("label")) {
            bump();
            ref.label = expect_string("label string").text;
        }
        if (at_word("keep")) {
            bump();
            ref.keep = true;
        }
        return ref;
    }

    void parse_string_list(std::vector<std::string>& out) {
        out.push_back(expect_string("string").text);
        while (cur_.kind == TokenKind::Comma) {
            bump();
            out.push_back(expect_string("string").text);
        }
    }

    Lexer lexer_;
    Token cur_;
};

std::string source_line(const std::string& source, int line) {
    int cur = 1;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= source.size(); ++i) {
        if (i == source.size() || source[i] == '\n') {
            if (cur == line) return source.substr(start, i - start);
            start = i + 1;
            ++cur;
        }
    }
    return {};
}

}  // namespace

ParseResult parse_catalog(const std::string& source) {
    ParseResult result;
    try {
        Parser parser(source);
        result.catalog = parser.parse();
    } catch (const ParseFailure& failure) {
        ParseError error;
        error.line = failure.pos.line;
        error.column = failure.pos.column;
        error.message = failure.message;
        error.snippet = source_line(source, failure.pos.line);
        result.error = error;
    }
    return result;
}

}  // namespace structmap
