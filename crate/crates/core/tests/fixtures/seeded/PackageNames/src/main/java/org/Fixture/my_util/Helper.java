package org.Fixture.my_util;

class Helper {}
