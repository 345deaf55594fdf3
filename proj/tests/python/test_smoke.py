import pytest

import tashkeel as t


def test_strip_and_canonicalize():
    assert t.strip_diacritics("قَلْبٌ كَبِيرٌ") == "قلب كبير"
    # Shadda goes before the vowel.
    assert t.canonicalize("لَّ") == "لَّ"


def test_clean_resolves_adjacent_sukuns():
    text, stats = t.clean_text("مِنْ الْبَيْتِ")
    assert text == "مِنِ الْبَيْتِ"
    assert stats["iltiqa_resolved"] == 1
    assert t.clean_text("مِنْ الْبَيْتِ", iltiqa=False)[0] == "مِنْ الْبَيْتِ"


def test_chunk_partitions_words():
    doc = " ".join(["قَلْبٌ"] * 130)
    chunks = t.chunk_document(doc, "d")
    assert [c["word_count"] for c in chunks] == [60, 60, 10]
    assert chunks[0]["id"] == "d:0-60"
    assert chunks[-1]["flag"] == "undersized_tail"
    with pytest.raises(t.TashkeelError):
        t.chunk_document("   ")


def test_judge_thresholds():
    full, bare, partial = "قَلْبٌ", "قلب", "قَلب"
    assert t.judge(" ".join([full] * 5 + [bare] * 2 + [partial] * 2))["kept"]
    verdict = t.judge(" ".join([full] * 5 + [bare] * 3))
    assert not verdict["kept"]
    assert verdict["reason"] == "TooManyUndiacritized"
    assert t.judge(" ".join([partial] * 3))["reason"] == "TooManyPartial"


def test_segment_index_and_overlap():
    index = t.SegmentIndex(["كتب الولد الدرس. ثم نام"])
    assert len(index) == 1
    assert index.find_leak("قَالَ، كَتَبَ الْوَلَدُ الدَّرْسَ.") == "كتب الولد الدرس"
    assert index.find_leak("ثُمَّ نَامَ") is None
    assert t.similarity("w1 w2 w3، a b، w4 w5 w6. c d", ["w1 w2 w3", "w4 w5 w6"]) == pytest.approx(0.6)
    report = t.analyze_overlap(["ا ب", "ت ث"], ["ا ب"])
    assert report["identical_in_a"]["count"] == 1
    assert report["identical_in_b"]["percent"] == 100.0


def test_align_and_repair():
    score, ops = t.nw_align(["a", "b", "c"], ["a", "c"])
    assert score == 1
    assert [op["op"] for op in ops] == ["match", "delete", "match"]
    r = t.repair("قلب حجر كبير", "قَلْبٌ computer كَبِيرٌ جِدًّا")
    assert r["repaired"] == "قَلْبٌ حجر كَبِيرٌ"
    assert r["stats"]["substituted"] == 1
    assert r["stats"]["inserted"] == 1
    assert r["stats"]["hallucination_rate"] == pytest.approx(100 / 3)


def test_metrics():
    c = t.compare_pair("قَلْب", "قُلْب")
    assert c["der"] == pytest.approx(33.333, abs=0.01)
    assert c["wer"] == 100.0
    assert t.compare_pair("قَلْب", "قُلْب", case_ending=False)["der"] == 50.0
    report = t.evaluate(["قَلْبٌ كَبِيرٌ"], ["قَلْبٌ كَبِيرٌ"])
    assert report["pairs"] == 1
    for by_ce in report["metrics"].values():
        for m in by_ce.values():
            assert m["der"] == 0.0
    with pytest.raises(t.BaseTextMismatchError) as err:
        t.evaluate(["قلب"], ["كلب"])
    assert err.value.sample_id == "0"
    assert isinstance(err.value, ValueError)


def test_templatize():
    r = t.templatize("قَلْبٌ.", system="sys")
    assert r == {"system": "sys", "input": "قلب.", "output": "قَلْبٌ."}
    assert t.templatize("قَلْبٌ")["system"]


def test_baseline_round_trip(tmp_path):
    model = t.LookupModel.train(["قَلْبٌ كَبِيرٌ", "قَلْبٌ"])
    assert model.vocabulary_size == 2
    assert model.training_word_count == 3
    assert model.predict("قلب كبير وصغير") == "قَلْبٌ كَبِيرٌ وصغير"
    path = str(tmp_path / "model.tsv")
    model.save(path)
    assert t.LookupModel.load(path).predict("قلب") == "قَلْبٌ"
    (tmp_path / "bad.tsv").write_text("nonsense\n")
    with pytest.raises(t.TashkeelError):
        t.LookupModel.load(str(tmp_path / "bad.tsv"))
    with pytest.raises(t.TashkeelError):
        t.LookupModel.train([])
