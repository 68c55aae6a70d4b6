/*
 * Copyright 2026 The heyde toolkit authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "heyde/kv.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>

namespace heyde {

const char* KvValue::type_name() const {
    switch (type) {
        case Type::Int: return "integer";
        case Type::Real: return "real";
        case Type::Bool: return "boolean";
        case Type::Str: return "string";
        case Type::List: return "list";
        case Type::Table: return "table";
    }
    return "?";
}

namespace {

[[noreturn]] void type_error(const KvValue& v, const std::string& what, const char* wanted) {
    throw ValidationError(what + ": expected " + wanted + ", got " + v.type_name() +
                          " (line " + std::to_string(v.line) + ")");
}

} // namespace

std::int64_t KvValue::as_int(const std::string& what) const {
    if (type != Type::Int) type_error(*this, what, "integer");
    return i;
}

double KvValue::as_real(const std::string& what) const {
    if (type == Type::Int) return static_cast<double>(i);
    if (type != Type::Real) type_error(*this, what, "real");
    return d;
}

bool KvValue::as_bool(const std::string& what) const {
    if (type != Type::Bool) type_error(*this, what, "boolean");
    return b;
}

const std::string& KvValue::as_str(const std::string& what) const {
    if (type != Type::Str) type_error(*this, what, "string");
    return s;
}

const std::vector<KvValue>& KvValue::as_list(const std::string& what) const {
    if (type != Type::List) type_error(*this, what, "list");
    return list;
}

const std::vector<std::pair<std::string, KvValue>>&
KvValue::as_table(const std::string& what) const {
    if (type != Type::Table) type_error(*this, what, "table");
    return table;
}

// ---------------------------------------------------------------------------

namespace {

class Lexer {
  public:
    explicit Lexer(const std::string& text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else if (c == '\n') {
                ++line_;
                col_ = 1;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++col_;
                ++pos_;
            } else {
                break;
            }
        }
    }

    bool eof() {
        skip_space();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void expect(char c) {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != c)
            fail(std::string("expected '") + c + "'");
        advance();
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            advance();
            return true;
        }
        return false;
    }

    std::string ident() {
        skip_space();
        mark();
        std::string out;
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
                out += c;
                advance();
            } else {
                break;
            }
        }
        if (out.empty() || std::isdigit(static_cast<unsigned char>(out[0])))
            fail("expected an identifier");
        return out;
    }

    std::string quoted_string() {
        skip_space();
        mark();
        expect('"');
        std::string out;
        while (pos_ < text_.size() && text_[pos_] != '"') {
            char c = text_[pos_];
            if (c == '\n') fail("unterminated string");
            if (c == '\\') {
                advance();
                if (pos_ >= text_.size()) fail("unterminated escape");
                const char e = text_[pos_];
                if (e == 'n') c = '\n';
                else if (e == 't') c = '\t';
                else if (e == '"') c = '"';
                else if (e == '\\') c = '\\';
                else fail("unknown escape sequence");
            }
            out += c;
            advance();
        }
        expect('"');
        return out;
    }

    // Number token: integers and reals, optional sign/exponent.
    KvValue number() {
        skip_space();
        mark();
        const std::size_t start = pos_;
        bool is_real = false;
        if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) advance();
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                advance();
            } else if (c == '.' || c == 'e' || c == 'E') {
                is_real = true;
                advance();
                if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-') &&
                    (c == 'e' || c == 'E'))
                    advance();
            } else {
                break;
            }
        }
        const std::string tok = text_.substr(start, pos_ - start);
        if (tok.empty() || tok == "+" || tok == "-") fail("expected a number");
        KvValue v;
        v.line = mark_line_;
        v.col = mark_col_;
        if (is_real) {
            v.type = KvValue::Type::Real;
            char* end = nullptr;
            v.d = std::strtod(tok.c_str(), &end);
            if (end == nullptr || *end != '\0') fail("malformed real number '" + tok + "'");
        } else {
            v.type = KvValue::Type::Int;
            const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v.i);
            if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
                fail("malformed integer '" + tok + "'");
        }
        return v;
    }

    void mark() {
        mark_line_ = line_;
        mark_col_ = col_;
    }
    int mark_line() const { return mark_line_; }
    int mark_col() const { return mark_col_; }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line_, col_); }

  private:
    void advance() {
        ++col_;
        ++pos_;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    int mark_line_ = 1;
    int mark_col_ = 1;
};

KvValue parse_value(Lexer& lex);

KvValue parse_table_body(Lexer& lex) {
    KvValue v;
    v.type = KvValue::Type::Table;
    v.line = lex.mark_line();
    v.col = lex.mark_col();
    if (lex.accept('}')) return v;
    while (true) {
        const std::string key = lex.ident();
        lex.expect('=');
        v.table.emplace_back(key, parse_value(lex));
        if (lex.accept('}')) return v;
        lex.expect(',');
    }
}

KvValue parse_value(Lexer& lex) {
    const char c = lex.peek();
    if (c == '"') {
        lex.mark();
        KvValue v;
        v.type = KvValue::Type::Str;
        v.line = lex.mark_line();
        v.col = lex.mark_col();
        v.s = lex.quoted_string();
        return v;
    }
    if (c == '[') {
        lex.expect('[');
        KvValue v;
        v.type = KvValue::Type::List;
        v.line = lex.mark_line();
        v.col = lex.mark_col();
        if (lex.accept(']')) return v;
        while (true) {
            v.list.push_back(parse_value(lex));
            if (lex.accept(']')) return v;
            lex.expect(',');
        }
    }
    if (c == '{') {
        lex.expect('{');
        return parse_table_body(lex);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        const std::string word = lex.ident();
        KvValue v;
        v.line = lex.mark_line();
        v.col = lex.mark_col();
        if (word == "true" || word == "false") {
            v.type = KvValue::Type::Bool;
            v.b = word == "true";
            return v;
        }
        lex.fail("unexpected word '" + word + "' (strings must be quoted)");
    }
    return lex.number();
}

} // namespace

KvValue kv_parse(const std::string& text) {
    Lexer lex(text);
    KvValue root;
    root.type = KvValue::Type::Table;
    while (!lex.eof()) {
        std::vector<std::string> path{lex.ident()};
        while (lex.accept('.')) path.push_back(lex.ident());
        lex.expect('=');
        KvValue value = parse_value(lex);
        // Dotted keys insert into nested tables, creating them as needed.
        KvValue* node = &root;
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            KvValue* next = nullptr;
            for (auto& [k, v] : node->table) {
                if (k == path[i]) {
                    if (v.type != KvValue::Type::Table)
                        throw ParseError("key '" + path[i] + "' is not a table", value.line,
                                         value.col);
                    next = &v;
                    break;
                }
            }
            if (next == nullptr) {
                KvValue t;
                t.type = KvValue::Type::Table;
                t.line = value.line;
                t.col = value.col;
                node->table.emplace_back(path[i], std::move(t));
                next = &node->table.back().second;
            }
            node = next;
        }
        node->table.emplace_back(path.back(), std::move(value));
    }
    return root;
}

// ---------------------------------------------------------------------------

KvTableReader::KvTableReader(const KvValue& table, std::string path)
    : table_(table), path_(std::move(path)), consumed_(table.table.size(), false) {
    if (table.type != KvValue::Type::Table)
        throw ValidationError(path_ + ": expected a table");
}

bool KvTableReader::has(const std::string& key) const {
    for (const auto& [k, v] : table_.table)
        if (k == key) return true;
    return false;
}

const KvValue* KvTableReader::find(const std::string& key) {
    const KvValue* found = nullptr;
    for (std::size_t i = 0; i < table_.table.size(); ++i) {
        if (table_.table[i].first != key) continue;
        if (found != nullptr)
            throw ValidationError(path_ + ": key '" + key + "' appears more than once");
        found = &table_.table[i].second;
        consumed_[i] = true;
    }
    return found;
}

const KvValue& KvTableReader::require(const std::string& key) {
    const KvValue* v = find(key);
    if (v == nullptr) throw ValidationError(path_ + ": missing required key '" + key + "'");
    return *v;
}

std::vector<const KvValue*> KvTableReader::find_all(const std::string& key) {
    std::vector<const KvValue*> out;
    for (std::size_t i = 0; i < table_.table.size(); ++i) {
        if (table_.table[i].first == key) {
            out.push_back(&table_.table[i].second);
            consumed_[i] = true;
        }
    }
    return out;
}

std::int64_t KvTableReader::require_int(const std::string& key) {
    return require(key).as_int(sub_path(key));
}

std::int64_t KvTableReader::int_or(const std::string& key, std::int64_t fallback) {
    const KvValue* v = find(key);
    return v ? v->as_int(sub_path(key)) : fallback;
}

double KvTableReader::require_real(const std::string& key) {
    return require(key).as_real(sub_path(key));
}

double KvTableReader::real_or(const std::string& key, double fallback) {
    const KvValue* v = find(key);
    return v ? v->as_real(sub_path(key)) : fallback;
}

std::string KvTableReader::require_str(const std::string& key) {
    return require(key).as_str(sub_path(key));
}

std::string KvTableReader::str_or(const std::string& key, const std::string& fallback) {
    const KvValue* v = find(key);
    return v ? v->as_str(sub_path(key)) : fallback;
}

void KvTableReader::finish() {
    for (std::size_t i = 0; i < table_.table.size(); ++i) {
        if (!consumed_[i])
            throw ValidationError(path_ + ": unknown key '" + table_.table[i].first +
                                  "' (line " + std::to_string(table_.table[i].second.line) +
                                  ")");
    }
}

std::vector<double> kv_real_list(const KvValue& v, const std::string& what) {
    std::vector<double> out;
    for (const KvValue& e : v.as_list(what)) out.push_back(e.as_real(what));
    return out;
}

std::vector<std::int64_t> kv_int_list(const KvValue& v, const std::string& what) {
    std::vector<std::int64_t> out;
    for (const KvValue& e : v.as_list(what)) out.push_back(e.as_int(what));
    return out;
}

std::vector<std::vector<std::int64_t>> kv_int_matrix(const KvValue& v, const std::string& what) {
    std::vector<std::vector<std::int64_t>> out;
    for (const KvValue& row : v.as_list(what)) out.push_back(kv_int_list(row, what));
    return out;
}

std::vector<std::vector<double>> kv_real_matrix(const KvValue& v, const std::string& what) {
    std::vector<std::vector<double>> out;
    for (const KvValue& row : v.as_list(what)) out.push_back(kv_real_list(row, what));
    return out;
}

} // namespace heyde
