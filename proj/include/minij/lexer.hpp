#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <unordered_map>

#include "minij/token.hpp"

namespace minij {

namespace detail {

inline const std::unordered_map<std::string_view, TokenKind>& keywordTable() {
    static const std::unordered_map<std::string_view, TokenKind> table = {
        {"package", TokenKind::KwPackage},   {"import", TokenKind::KwImport},
        {"class", TokenKind::KwClass},       {"interface", TokenKind::KwInterface},
        {"extends", TokenKind::KwExtends},   {"implements", TokenKind::KwImplements},
        {"public", TokenKind::KwPublic},     {"protected", TokenKind::KwProtected},
        {"private", TokenKind::KwPrivate},   {"static", TokenKind::KwStatic},
        {"final", TokenKind::KwFinal},       {"abstract", TokenKind::KwAbstract},
        {"void", TokenKind::KwVoid},         {"boolean", TokenKind::KwBoolean},
        {"char", TokenKind::KwChar},         {"byte", TokenKind::KwByte},
        {"short", TokenKind::KwShort},       {"int", TokenKind::KwInt},
        {"long", TokenKind::KwLong},         {"float", TokenKind::KwFloat},
        {"double", TokenKind::KwDouble},     {"return", TokenKind::KwReturn},
        {"new", TokenKind::KwNew},           {"this", TokenKind::KwThis},
        {"true", TokenKind::KwTrue},         {"false", TokenKind::KwFalse},
        {"null", TokenKind::KwNull},
    };
    return table;
}

}  // namespace detail

/// Splits one source file into tokens. Comments and whitespace are dropped;
/// every token carries the location of its first byte. Any byte outside the
/// token alphabet raises LexError at its position.
inline TokenStream tokenize(std::string_view source, const std::string& file) {
    TokenStream out;
    size_t i = 0;
    int line = 1;
    int col = 1;

    auto here = [&] { return SourceLocation{file, line, col}; };
    auto advance = [&](size_t n = 1) {
        for (size_t k = 0; k < n && i < source.size(); ++k) {
            if (source[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++i;
        }
    };
    auto peek = [&](size_t off = 0) -> char {
        return i + off < source.size() ? source[i + off] : '\0';
    };

    while (i < source.size()) {
        char c = source[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance();
            continue;
        }
        if (c == '/' && peek(1) == '/') {
            while (i < source.size() && source[i] != '\n') advance();
            continue;
        }
        if (c == '/' && peek(1) == '*') {
            SourceLocation start = here();
            advance(2);
            while (i < source.size() && !(source[i] == '*' && peek(1) == '/')) advance();
            if (i >= source.size()) throw LexError(start, "unterminated block comment");
            advance(2);
            continue;
        }

        SourceLocation loc = here();
        auto single = [&](TokenKind k) {
            out.push_back({k, std::string(1, c), loc});
            advance();
        };

        switch (c) {
            case '{': single(TokenKind::LBrace); continue;
            case '}': single(TokenKind::RBrace); continue;
            case '(': single(TokenKind::LParen); continue;
            case ')': single(TokenKind::RParen); continue;
            case '[': single(TokenKind::LBracket); continue;
            case ']': single(TokenKind::RBracket); continue;
            case ';': single(TokenKind::Semi); continue;
            case ',': single(TokenKind::Comma); continue;
            case '.': single(TokenKind::Dot); continue;
            case '=': single(TokenKind::Assign); continue;
            case '@': single(TokenKind::At); continue;
            default: break;
        }

        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = i;
            while (i < source.size() &&
                   (std::isalnum(static_cast<unsigned char>(source[i])) || source[i] == '_')) {
                advance();
            }
            std::string text(source.substr(start, i - start));
            auto it = detail::keywordTable().find(text);
            out.push_back({it != detail::keywordTable().end() ? it->second : TokenKind::Identifier,
                           std::move(text), loc});
            continue;
        }

        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = i;
            while (i < source.size() && std::isdigit(static_cast<unsigned char>(source[i]))) advance();
            bool isDouble = false;
            if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
                isDouble = true;
                advance();
                while (i < source.size() && std::isdigit(static_cast<unsigned char>(source[i]))) advance();
            }
            out.push_back({isDouble ? TokenKind::DoubleLit : TokenKind::IntLit,
                           std::string(source.substr(start, i - start)), loc});
            continue;
        }

        if (c == '"' || c == '\'') {
            char quote = c;
            size_t start = i;
            advance();
            while (i < source.size() && source[i] != quote) {
                if (source[i] == '\n') throw LexError(loc, "unterminated literal");
                if (source[i] == '\\') {
                    char esc = peek(1);
                    if (esc != 'n' && esc != 't' && esc != '\\' && esc != '"' && esc != '\'') {
                        throw LexError(here(), "unsupported escape sequence");
                    }
                    advance(2);
                } else {
                    advance();
                }
            }
            if (i >= source.size()) throw LexError(loc, "unterminated literal");
            advance();
            out.push_back({quote == '"' ? TokenKind::StringLit : TokenKind::CharLit,
                           std::string(source.substr(start, i - start)), loc});
            continue;
        }

        throw LexError(loc, "unexpected character");
    }

    out.push_back({TokenKind::EndOfFile, "", here()});
    return out;
}

}  // namespace minij
