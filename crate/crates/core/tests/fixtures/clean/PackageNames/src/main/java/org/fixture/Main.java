package org.fixture;

class Main {}
