#include "koyal/script_tables.hpp"

// ISO-15919 tables, one line per entry: hex codepoint(s), TAB, Latin output,
// TAB, flag. Flags: C consonant (inherent a), V vowel sign, X virama,
// D digit, P plain, R drop. Multi-codepoint keys (nukta pairs, decomposed
// two-part vowels) take precedence over single codepoints. '#' starts a
// comment. Keep each block aligned with the Unicode chart order so the data
// stays auditable against the standard.

namespace koyal::tables {

const std::string_view kDevanagari = R"(# Devanagari U+0900-097F
0900	m̐	P
0901	m̐	P
0902	ṁ	P
0903	ḥ	P
0905	a	P
0906	ā	P
0907	i	P
0908	ī	P
0909	u	P
090A	ū	P
090B	r̥	P
090C	l̥	P
090D	ê	P
090E	e	P
090F	ē	P
0910	ai	P
0911	ô	P
0912	o	P
0913	ō	P
0914	au	P
0915	k	C
0916	kh	C
0917	g	C
0918	gh	C
0919	ṅ	C
091A	c	C
091B	ch	C
091C	j	C
091D	jh	C
091E	ñ	C
091F	ṭ	C
0920	ṭh	C
0921	ḍ	C
0922	ḍh	C
0923	ṇ	C
0924	t	C
0925	th	C
0926	d	C
0927	dh	C
0928	n	C
0929	ṉ	C
092A	p	C
092B	ph	C
092C	b	C
092D	bh	C
092E	m	C
092F	y	C
0930	r	C
0931	ṟ	C
0932	l	C
0933	ḷ	C
0934	ḻ	C
0935	v	C
0936	ś	C
0937	ṣ	C
0938	s	C
0939	h	C
093D	’	P
093E	ā	V
093F	i	V
0940	ī	V
0941	u	V
0942	ū	V
0943	r̥	V
0944	r̥̄	V
0945	ê	V
0946	e	V
0947	ē	V
0948	ai	V
0949	ô	V
094A	o	V
094B	ō	V
094C	au	V
094D		X
0950	ōṁ	P
0951		R
0952		R
0953		R
0954		R
0958	q	C
0959	k͟h	C
095A	ġ	C
095B	z	C
095C	ṛ	C
095D	ṛh	C
095E	f	C
095F	ẏ	C
0960	r̥̄	P
0961	l̥̄	P
0962	l̥	V
0963	l̥̄	V
0964	.	P
0965	..	P
0966	0	D
0967	1	D
0968	2	D
0969	3	D
096A	4	D
096B	5	D
096C	6	D
096D	7	D
096E	8	D
096F	9	D
0970	.	P
0972	ê	P
# nukta pairs (NFC decomposes U+0958-095F and U+0929/0931/0934)
0915 093C	q	C
0916 093C	k͟h	C
0917 093C	ġ	C
091C 093C	z	C
0921 093C	ṛ	C
0922 093C	ṛh	C
092B 093C	f	C
092F 093C	ẏ	C
0928 093C	ṉ	C
0930 093C	ṟ	C
0933 093C	ḻ	C
)";

const std::string_view kBengali = R"(# Bengali U+0980-09FF
0981	m̐	P
0982	ṁ	P
0983	ḥ	P
0985	a	P
0986	ā	P
0987	i	P
0988	ī	P
0989	u	P
098A	ū	P
098B	r̥	P
098C	l̥	P
098F	ē	P
0990	ai	P
0993	ō	P
0994	au	P
0995	k	C
0996	kh	C
0997	g	C
0998	gh	C
0999	ṅ	C
099A	c	C
099B	ch	C
099C	j	C
099D	jh	C
099E	ñ	C
099F	ṭ	C
09A0	ṭh	C
09A1	ḍ	C
09A2	ḍh	C
09A3	ṇ	C
09A4	t	C
09A5	th	C
09A6	d	C
09A7	dh	C
09A8	n	C
09AA	p	C
09AB	ph	C
09AC	b	C
09AD	bh	C
09AE	m	C
09AF	y	C
09B0	r	C
09B2	l	C
09B6	ś	C
09B7	ṣ	C
09B8	s	C
09B9	h	C
09BD	’	P
09BE	ā	V
09BF	i	V
09C0	ī	V
09C1	u	V
09C2	ū	V
09C3	r̥	V
09C4	r̥̄	V
09C7	ē	V
09C8	ai	V
09CB	ō	V
09CC	au	V
09CD		X
09CE	t	P
09DC	ṛ	C
09DD	ṛh	C
09DF	ẏ	C
09E0	r̥̄	P
09E1	l̥̄	P
09E2	l̥	V
09E3	l̥̄	V
09E6	0	D
09E7	1	D
09E8	2	D
09E9	3	D
09EA	4	D
09EB	5	D
09EC	6	D
09ED	7	D
09EE	8	D
09EF	9	D
09F0	r	C
09F1	v	C
# decomposed two-part vowels and nukta pairs
09C7 09BE	ō	V
09C7 09D7	au	V
09A1 09BC	ṛ	C
09A2 09BC	ṛh	C
09AF 09BC	ẏ	C
)";

const std::string_view kGujarati = R"(# Gujarati U+0A80-0AFF
0A81	m̐	P
0A82	ṁ	P
0A83	ḥ	P
0A85	a	P
0A86	ā	P
0A87	i	P
0A88	ī	P
0A89	u	P
0A8A	ū	P
0A8B	r̥	P
0A8C	l̥	P
0A8D	ê	P
0A8F	ē	P
0A90	ai	P
0A91	ô	P
0A93	ō	P
0A94	au	P
0A95	k	C
0A96	kh	C
0A97	g	C
0A98	gh	C
0A99	ṅ	C
0A9A	c	C
0A9B	ch	C
0A9C	j	C
0A9D	jh	C
0A9E	ñ	C
0A9F	ṭ	C
0AA0	ṭh	C
0AA1	ḍ	C
0AA2	ḍh	C
0AA3	ṇ	C
0AA4	t	C
0AA5	th	C
0AA6	d	C
0AA7	dh	C
0AA8	n	C
0AAA	p	C
0AAB	ph	C
0AAC	b	C
0AAD	bh	C
0AAE	m	C
0AAF	y	C
0AB0	r	C
0AB2	l	C
0AB3	ḷ	C
0AB5	v	C
0AB6	ś	C
0AB7	ṣ	C
0AB8	s	C
0AB9	h	C
0ABD	’	P
0ABE	ā	V
0ABF	i	V
0AC0	ī	V
0AC1	u	V
0AC2	ū	V
0AC3	r̥	V
0AC4	r̥̄	V
0AC5	ê	V
0AC7	ē	V
0AC8	ai	V
0AC9	ô	V
0ACB	ō	V
0ACC	au	V
0ACD		X
0AD0	ōṁ	P
0AE0	r̥̄	P
0AE1	l̥̄	P
0AE2	l̥	V
0AE3	l̥̄	V
0AE6	0	D
0AE7	1	D
0AE8	2	D
0AE9	3	D
0AEA	4	D
0AEB	5	D
0AEC	6	D
0AED	7	D
0AEE	8	D
0AEF	9	D
0AF0	.	P
# nukta pairs
0A95 0ABC	q	C
0A96 0ABC	k͟h	C
0A97 0ABC	ġ	C
0A9C 0ABC	z	C
0AA1 0ABC	ṛ	C
0AA2 0ABC	ṛh	C
0AAB 0ABC	f	C
)";

const std::string_view kTamil = R"(# Tamil U+0B80-0BFF
0B82	ṁ	P
0B83	ḵ	P
0B85	a	P
0B86	ā	P
0B87	i	P
0B88	ī	P
0B89	u	P
0B8A	ū	P
0B8E	e	P
0B8F	ē	P
0B90	ai	P
0B92	o	P
0B93	ō	P
0B94	au	P
0B95	k	C
0B99	ṅ	C
0B9A	c	C
0B9C	j	C
0B9E	ñ	C
0B9F	ṭ	C
0BA3	ṇ	C
0BA4	t	C
0BA8	n	C
0BA9	ṉ	C
0BAA	p	C
0BAE	m	C
0BAF	y	C
0BB0	r	C
0BB1	ṟ	C
0BB2	l	C
0BB3	ḷ	C
0BB4	ḻ	C
0BB5	v	C
0BB6	ś	C
0BB7	ṣ	C
0BB8	s	C
0BB9	h	C
0BBE	ā	V
0BBF	i	V
0BC0	ī	V
0BC1	u	V
0BC2	ū	V
0BC6	e	V
0BC7	ē	V
0BC8	ai	V
0BCA	o	V
0BCB	ō	V
0BCC	au	V
0BCD		X
0BD0	ōṁ	P
0BD7	au	V
0BE6	0	D
0BE7	1	D
0BE8	2	D
0BE9	3	D
0BEA	4	D
0BEB	5	D
0BEC	6	D
0BED	7	D
0BEE	8	D
0BEF	9	D
# decomposed two-part vowels
0BC6 0BBE	o	V
0BC7 0BBE	ō	V
0BC6 0BD7	au	V
0B92 0BD7	au	P
)";

const std::string_view kTelugu = R"(# Telugu U+0C00-0C7F
0C00	m̐	P
0C01	m̐	P
0C02	ṁ	P
0C03	ḥ	P
0C05	a	P
0C06	ā	P
0C07	i	P
0C08	ī	P
0C09	u	P
0C0A	ū	P
0C0B	r̥	P
0C0C	l̥	P
0C0E	e	P
0C0F	ē	P
0C10	ai	P
0C12	o	P
0C13	ō	P
0C14	au	P
0C15	k	C
0C16	kh	C
0C17	g	C
0C18	gh	C
0C19	ṅ	C
0C1A	c	C
0C1B	ch	C
0C1C	j	C
0C1D	jh	C
0C1E	ñ	C
0C1F	ṭ	C
0C20	ṭh	C
0C21	ḍ	C
0C22	ḍh	C
0C23	ṇ	C
0C24	t	C
0C25	th	C
0C26	d	C
0C27	dh	C
0C28	n	C
0C2A	p	C
0C2B	ph	C
0C2C	b	C
0C2D	bh	C
0C2E	m	C
0C2F	y	C
0C30	r	C
0C31	ṟ	C
0C32	l	C
0C33	ḷ	C
0C34	ḻ	C
0C35	v	C
0C36	ś	C
0C37	ṣ	C
0C38	s	C
0C39	h	C
0C3D	’	P
0C3E	ā	V
0C3F	i	V
0C40	ī	V
0C41	u	V
0C42	ū	V
0C43	r̥	V
0C44	r̥̄	V
0C46	e	V
0C47	ē	V
0C48	ai	V
0C4A	o	V
0C4B	ō	V
0C4C	au	V
0C4D		X
0C60	r̥̄	P
0C61	l̥̄	P
0C62	l̥	V
0C63	l̥̄	V
0C66	0	D
0C67	1	D
0C68	2	D
0C69	3	D
0C6A	4	D
0C6B	5	D
0C6C	6	D
0C6D	7	D
0C6E	8	D
0C6F	9	D
# decomposed two-part vowel
0C46 0C56	ai	V
)";

const std::string_view kKannada = R"(# Kannada U+0C80-0CFF
0C80	m̐	P
0C81	m̐	P
0C82	ṁ	P
0C83	ḥ	P
0C85	a	P
0C86	ā	P
0C87	i	P
0C88	ī	P
0C89	u	P
0C8A	ū	P
0C8B	r̥	P
0C8C	l̥	P
0C8E	e	P
0C8F	ē	P
0C90	ai	P
0C92	o	P
0C93	ō	P
0C94	au	P
0C95	k	C
0C96	kh	C
0C97	g	C
0C98	gh	C
0C99	ṅ	C
0C9A	c	C
0C9B	ch	C
0C9C	j	C
0C9D	jh	C
0C9E	ñ	C
0C9F	ṭ	C
0CA0	ṭh	C
0CA1	ḍ	C
0CA2	ḍh	C
0CA3	ṇ	C
0CA4	t	C
0CA5	th	C
0CA6	d	C
0CA7	dh	C
0CA8	n	C
0CAA	p	C
0CAB	ph	C
0CAC	b	C
0CAD	bh	C
0CAE	m	C
0CAF	y	C
0CB0	r	C
0CB1	ṟ	C
0CB2	l	C
0CB3	ḷ	C
0CB5	v	C
0CB6	ś	C
0CB7	ṣ	C
0CB8	s	C
0CB9	h	C
0CBD	’	P
0CBE	ā	V
0CBF	i	V
0CC0	ī	V
0CC1	u	V
0CC2	ū	V
0CC3	r̥	V
0CC4	r̥̄	V
0CC6	e	V
0CC7	ē	V
0CC8	ai	V
0CCA	o	V
0CCB	ō	V
0CCC	au	V
0CCD		X
0CDE	ḻ	C
0CE0	r̥̄	P
0CE1	l̥̄	P
0CE2	l̥	V
0CE3	l̥̄	V
0CE6	0	D
0CE7	1	D
0CE8	2	D
0CE9	3	D
0CEA	4	D
0CEB	5	D
0CEC	6	D
0CED	7	D
0CEE	8	D
0CEF	9	D
# decomposed two-part vowels and nukta pairs
0CBF 0CD5	ī	V
0CC6 0CD5	ē	V
0CC6 0CD6	ai	V
0CC6 0CC2	o	V
0CC6 0CC2 0CD5	ō	V
0C9C 0CBC	z	C
0CAB 0CBC	f	C
)";

const std::string_view kMalayalam = R"(# Malayalam U+0D00-0D7F
0D00	m̐	P
0D01	m̐	P
0D02	ṁ	P
0D03	ḥ	P
0D05	a	P
0D06	ā	P
0D07	i	P
0D08	ī	P
0D09	u	P
0D0A	ū	P
0D0B	r̥	P
0D0C	l̥	P
0D0E	e	P
0D0F	ē	P
0D10	ai	P
0D12	o	P
0D13	ō	P
0D14	au	P
0D15	k	C
0D16	kh	C
0D17	g	C
0D18	gh	C
0D19	ṅ	C
0D1A	c	C
0D1B	ch	C
0D1C	j	C
0D1D	jh	C
0D1E	ñ	C
0D1F	ṭ	C
0D20	ṭh	C
0D21	ḍ	C
0D22	ḍh	C
0D23	ṇ	C
0D24	t	C
0D25	th	C
0D26	d	C
0D27	dh	C
0D28	n	C
0D29	ṉ	C
0D2A	p	C
0D2B	ph	C
0D2C	b	C
0D2D	bh	C
0D2E	m	C
0D2F	y	C
0D30	r	C
0D31	ṟ	C
0D32	l	C
0D33	ḷ	C
0D34	ḻ	C
0D35	v	C
0D36	ś	C
0D37	ṣ	C
0D38	s	C
0D39	h	C
0D3D	’	P
0D3E	ā	V
0D3F	i	V
0D40	ī	V
0D41	u	V
0D42	ū	V
0D43	r̥	V
0D44	r̥̄	V
0D46	e	V
0D47	ē	V
0D48	ai	V
0D4A	o	V
0D4B	ō	V
0D4C	au	V
0D4D		X
0D4E	r	P
0D54	m	P
0D55	y	P
0D56	ḻ	P
0D57	au	V
0D60	r̥̄	P
0D61	l̥̄	P
0D62	l̥	V
0D63	l̥̄	V
0D66	0	D
0D67	1	D
0D68	2	D
0D69	3	D
0D6A	4	D
0D6B	5	D
0D6C	6	D
0D6D	7	D
0D6E	8	D
0D6F	9	D
0D7A	ṇ	P
0D7B	n	P
0D7C	r	P
0D7D	l	P
0D7E	ḷ	P
0D7F	k	P
# decomposed two-part vowels
0D46 0D3E	o	V
0D47 0D3E	ō	V
0D46 0D57	au	V
)";

std::string_view embedded_table_source(ScriptClass script) {
  switch (script) {
    case ScriptClass::Devanagari: return kDevanagari;
    case ScriptClass::Bengali: return kBengali;
    case ScriptClass::Gujarati: return kGujarati;
    case ScriptClass::Tamil: return kTamil;
    case ScriptClass::Telugu: return kTelugu;
    case ScriptClass::Kannada: return kKannada;
    case ScriptClass::Malayalam: return kMalayalam;
    case ScriptClass::PassThrough: break;
  }
  return {};
}

}  // namespace koyal::tables
